#include "permclass/permutation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace permclass {

namespace {

void validate(const std::vector<int>& values) {
  std::vector<bool> seen(values.size() + 1, false);
  for (int v : values) {
    if (v < 1 || static_cast<std::size_t>(v) > values.size() || seen[v]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(values.size()) +
                                  ": offending value " + std::to_string(v));
    }
    seen[v] = true;
  }
}

bool place(std::span<const int> pattern, std::span<const int> host, std::vector<std::size_t>& chosen,
           std::size_t start) {
  const std::size_t t = chosen.size();
  if (t == pattern.size()) return true;
  const std::size_t remaining = pattern.size() - t;
  for (std::size_t h = start; h + remaining <= host.size(); ++h) {
    bool consistent = true;
    for (std::size_t s = 0; s < t && consistent; ++s) {
      consistent = (pattern[s] < pattern[t]) == (host[chosen[s]] < host[h]);
    }
    if (!consistent) continue;
    chosen.push_back(h);
    if (place(pattern, host, chosen, h + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) { validate(values_); }

Permutation::Permutation(std::initializer_list<int> values) : values_(values) { validate(values_); }

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::from_digits(const std::string& digits) {
  std::vector<int> v;
  v.reserve(digits.size());
  for (char c : digits) {
    if (c < '1' || c > '9') throw std::invalid_argument("bad digit in \"" + digits + "\"");
    v.push_back(c - '0');
  }
  return Permutation(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << to_string(p); }

std::string to_string(const Permutation& p) {
  std::ostringstream out;
  bool first = true;
  for (int v : p) {
    if (!first) out << ' ';
    out << v;
    first = false;
  }
  return out.str();
}

std::string to_string(const Word& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    out << w[i];
  }
  return out.str();
}

Permutation pattern_of(std::span<const int> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<int> result(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) result[order[r]] = static_cast<int>(r) + 1;
  return Permutation(std::move(result));
}

bool involves(const Permutation& pattern, const Permutation& host) {
  if (pattern.size() > host.size()) return false;
  std::vector<std::size_t> chosen;
  chosen.reserve(pattern.size());
  return place(pattern.values(), host.values(), chosen, 0);
}

Permutation inverse(const Permutation& p) {
  std::vector<int> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p.values()[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(q));
}

Word rank_encode(const Permutation& p) {
  // Fenwick tree over values, filled right to left.
  const std::size_t n = p.size();
  std::vector<int> tree(n + 1, 0);
  Word word(n);
  for (std::size_t i = n; i-- > 0;) {
    const int v = p.values()[i];
    int smaller = 0;
    for (int j = v - 1; j > 0; j -= j & -j) smaller += tree[j];
    word[i] = smaller + 1;
    for (std::size_t j = v; j <= n; j += j & -j) ++tree[j];
  }
  return word;
}

std::optional<Word> rank_encode_bounded(const Permutation& p, int k) {
  // `smallest` holds the min(k, suffix length) smallest values of the
  // processed suffix in increasing order.
  std::vector<int> smallest;
  smallest.reserve(static_cast<std::size_t>(k) + 1);
  Word word(p.size());
  for (std::size_t i = p.size(); i-- > 0;) {
    const int v = p.values()[i];
    const auto pos = std::lower_bound(smallest.begin(), smallest.end(), v);
    const auto below = static_cast<int>(pos - smallest.begin());
    if (below >= k) return std::nullopt;
    word[i] = below + 1;
    smallest.insert(pos, v);
    if (static_cast<int>(smallest.size()) > k) smallest.pop_back();
  }
  return word;
}

bool is_rank_encoding(std::span<const int> word) {
  const std::size_t n = word.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (word[j] < 1 || static_cast<std::size_t>(word[j]) > n - j) return false;
  }
  return true;
}

Permutation rank_decode(std::span<const int> word) {
  const std::size_t n = word.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (word[j] < 1) {
      throw DecodeError(j + 1, "letter " + std::to_string(word[j]) + " at position " +
                                   std::to_string(j + 1) + " is not positive");
    }
    if (static_cast<std::size_t>(word[j]) > n - j) {
      throw DecodeError(j + 1, "letter " + std::to_string(word[j]) + " at position " +
                                   std::to_string(j + 1) + " exceeds " + std::to_string(n - j) +
                                   ", the number of remaining positions");
    }
  }
  // Positions ordered by value; position j is inserted with rank word[j]
  // among the positions to its right. Deque keeps bounded words O(n k).
  std::deque<std::size_t> by_value;
  for (std::size_t j = n; j-- > 0;) {
    by_value.insert(by_value.begin() + (word[j] - 1), j);
  }
  std::vector<int> values(n);
  for (std::size_t r = 0; r < n; ++r) values[by_value[r]] = static_cast<int>(r) + 1;
  return Permutation(std::move(values));
}

int max_rank(const Permutation& p) {
  const Word w = rank_encode(p);
  return w.empty() ? 0 : *std::max_element(w.begin(), w.end());
}

Permutation delete_at(const Permutation& p, std::size_t position) {
  if (position < 1 || position > p.size()) {
    throw std::out_of_range("position " + std::to_string(position) + " outside 1.." +
                            std::to_string(p.size()));
  }
  const int removed = p.at(position);
  std::vector<int> rest;
  rest.reserve(p.size() - 1);
  for (std::size_t i = 1; i <= p.size(); ++i) {
    if (i == position) continue;
    const int v = p.at(i);
    rest.push_back(v > removed ? v - 1 : v);
  }
  return Permutation(std::move(rest));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<std::vector<Permutation>> avoidance_class(std::span<const Permutation> basis, int maxlen) {
  std::vector<std::vector<Permutation>> result(static_cast<std::size_t>(maxlen) + 1);
  for (int n = 0; n <= maxlen; ++n) {
    for (auto& p : all_permutations(n)) {
      const bool avoids = std::none_of(basis.begin(), basis.end(),
                                       [&](const Permutation& b) { return involves(b, p); });
      if (avoids) result[n].push_back(std::move(p));
    }
  }
  return result;
}

bool is_antichain(std::span<const Permutation> perms) {
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = 0; b < perms.size(); ++b) {
      if (a != b && involves(perms[a], perms[b])) return false;
    }
  }
  return true;
}

RestrictedBasis brute_basis(const MembershipPredicate& member, int maxlen) {
  RestrictedBasis basis{maxlen, {}};
  for (int n = 0; n <= maxlen; ++n) {
    for (auto& p : all_permutations(n)) {
      if (member(p)) continue;
      bool minimal = true;
      for (std::size_t i = 1; i <= p.size() && minimal; ++i) minimal = member(delete_at(p, i));
      if (minimal) basis.elements.push_back(std::move(p));
    }
  }
  const auto& el = basis.elements;
  for (std::size_t a = 0; a < el.size(); ++a) {
    for (std::size_t b = 0; b < el.size(); ++b) {
      if (a != b && involves(el[a], el[b])) {
        throw NotClosedError("predicate is not closed: basis candidate " + to_string(el[a]) +
                             " is involved in " + to_string(el[b]));
      }
    }
  }
  return basis;
}

}  // namespace permclass
