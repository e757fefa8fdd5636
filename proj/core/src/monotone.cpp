#include "permclass/monotone.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace permclass {

SignSequence::SignSequence(const std::string& signs) {
  if (signs.empty()) throw std::invalid_argument("sign sequence must be nonempty");
  for (char c : signs) {
    if (c == '+') {
      signs_.push_back(Sign::increasing);
    } else if (c == '-') {
      signs_.push_back(Sign::decreasing);
    } else {
      throw std::invalid_argument(std::string("bad sign '") + c + "' in \"" + signs + "\"");
    }
  }
}

std::string SignSequence::to_string() const {
  std::string out;
  for (Sign s : signs_) out += s == Sign::increasing ? '+' : '-';
  return out;
}

namespace {

// reach[i][pos]: largest end such that p[pos, end) is monotone in the
// direction of scan i + 1.
std::vector<std::vector<std::size_t>> segment_reach(const SignSequence& phi, const Permutation& p) {
  const std::size_t n = p.size();
  const auto v = p.values();
  std::vector<std::size_t> up(n + 1, n), down(n + 1, n);
  for (std::size_t pos = n; pos-- > 0;) {
    const bool last = pos + 1 == n;
    up[pos] = last ? n : (v[pos] < v[pos + 1] ? up[pos + 1] : pos + 1);
    down[pos] = last ? n : (v[pos] > v[pos + 1] ? down[pos + 1] : pos + 1);
  }
  std::vector<std::vector<std::size_t>> reach;
  for (int i = 1; i <= phi.size(); ++i) reach.push_back(phi[i] == Sign::increasing ? up : down);
  return reach;
}

}  // namespace

Permutation decode_word(const SignSequence& phi, std::span<const int> word) {
  const int k = phi.size();
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < word.size(); ++i) {
    const int c = word[i];
    if (c < 1 || c > k) {
      throw std::out_of_range("letter " + std::to_string(c) + " outside [" + std::to_string(k) + "]");
    }
    blocks[static_cast<std::size_t>(c - 1)].push_back(static_cast<int>(i) + 1);
  }
  std::vector<int> values;
  values.reserve(word.size());
  for (int scan = 1; scan <= k; ++scan) {
    auto& block = blocks[static_cast<std::size_t>(scan - 1)];
    if (phi[scan] == Sign::decreasing) std::reverse(block.begin(), block.end());
    values.insert(values.end(), block.begin(), block.end());
  }
  return Permutation(std::move(values));
}

std::vector<Word> encodings(const SignSequence& phi, const Permutation& p) {
  const std::size_t n = p.size();
  const int k = phi.size();
  const auto reach = segment_reach(phi, p);

  // feasible[i][pos]: scans i+1..k can cover p[pos, n).
  std::vector<std::vector<bool>> feasible(static_cast<std::size_t>(k) + 1, std::vector<bool>(n + 1, false));
  feasible[static_cast<std::size_t>(k)][n] = true;
  for (int i = k - 1; i >= 0; --i) {
    for (std::size_t pos = 0; pos <= n; ++pos) {
      for (std::size_t end = pos; end <= reach[i][pos] && !feasible[i][pos]; ++end) {
        feasible[i][pos] = feasible[i + 1][end];
      }
    }
  }

  std::vector<Word> out;
  Word word(n, 0);
  const auto walk = [&](auto&& self, int i, std::size_t pos) -> void {
    if (i == k) {
      out.push_back(word);
      return;
    }
    for (std::size_t end = pos; end <= reach[i][pos]; ++end) {
      if (!feasible[i + 1][end]) continue;
      for (std::size_t j = pos; j < end; ++j) word[p.values()[j] - 1] = i + 1;
      self(self, i + 1, end);
    }
  };
  if (feasible[0][0]) walk(walk, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Word greedy_encoding(const SignSequence& phi, const Permutation& p) {
  const auto reach = segment_reach(phi, p);
  Word word(p.size(), 0);
  std::size_t pos = 0;
  for (int i = 0; i < phi.size(); ++i) {
    const std::size_t end = reach[i][pos];
    for (std::size_t j = pos; j < end; ++j) word[p.values()[j] - 1] = i + 1;
    pos = end;
  }
  if (pos < p.size()) {
    throw NotInClassError(pos + 1, "permutation " + to_string(p) + " is not in W(" + phi.to_string() +
                                       "): position " + std::to_string(pos + 1) +
                                       " is left after the last segment");
  }
  return word;
}

bool in_segment_class(const SignSequence& phi, const Permutation& p) {
  const auto reach = segment_reach(phi, p);
  std::size_t pos = 0;
  for (int i = 0; i < phi.size(); ++i) pos = reach[i][pos];
  return pos == p.size();
}

Automaton greedy_automaton(const SignSequence& phi) {
  const int k = phi.size();
  if (k > 30) throw std::invalid_argument("greedy_automaton supports at most 30 scans");
  // State bits 0..k-1: letter seen. Bit k+j-1 (1 <= j < k): the flag of the
  // pair (j, j+1); its meaning depends on the two signs.
  using State = std::uint64_t;
  const auto seen = [](State s, int letter) { return ((s >> (letter - 1)) & 1U) != 0; };
  const auto flag_bit = [k](int j) { return State{1} << (k + j - 1); };

  const auto step = [&](State s, int c) {
    State next = s | (State{1} << (c - 1));
    for (int j = 1; j < k; ++j) {
      const int q = j + 1;
      if (c != j && c != q) continue;
      const bool inc_p = phi[j] == Sign::increasing;
      const bool inc_q = phi[q] == Sign::increasing;
      bool flag = (s & flag_bit(j)) != 0;
      if (inc_p && inc_q) {
        if (c == j && seen(s, q)) flag = true;  // some j after the first q
      } else if (inc_p) {
        flag = c == j;  // last of {j, q} read is j
      } else if (inc_q) {
        if (!seen(s, j) && !seen(s, q)) flag = c == j;  // first of {j, q} is j
      } else {
        if (c == q && seen(s, j)) flag = true;  // some q after the first j
      }
      next = flag ? (next | flag_bit(j)) : (next & ~flag_bit(j));
    }
    return next;
  };
  const auto accepting = [&](State s) {
    const State mask = s & ((State{1} << k) - 1);
    if ((mask & (mask + 1)) != 0) return false;  // letters used must be 1..m
    for (int j = 1; j < k; ++j) {
      if (seen(s, j) && seen(s, j + 1) && (s & flag_bit(j)) == 0) return false;
    }
    return true;
  };

  Automaton dfa(k);
  std::map<State, int> ids;
  std::vector<State> states;
  const auto intern = [&](State s) {
    const auto [it, inserted] = ids.emplace(s, static_cast<int>(states.size()));
    if (inserted) {
      dfa.add_state(accepting(s));
      states.push_back(s);
    }
    return it->second;
  };
  intern(0);
  for (std::size_t next = 0; next < states.size(); ++next) {
    for (int c = 1; c <= k; ++c) {
      const int target = intern(step(states[next], c));
      dfa.add_transition(static_cast<int>(next), c, target);
    }
  }
  dfa.set_initial(0);
  return minimize(dfa);
}

namespace {

bool is_subsequence(const Word& small, const Word& big) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < big.size() && i < small.size(); ++j) {
    if (big[j] == small[i]) ++i;
  }
  return i == small.size();
}

}  // namespace

Automaton closed_subset_acceptor(const SignSequence& phi, std::span<const Permutation> basis) {
  const int k = phi.size();
  std::vector<Word> forbidden;
  for (const Permutation& b : basis) {
    for (Word& w : encodings(phi, b)) forbidden.push_back(std::move(w));
  }
  std::sort(forbidden.begin(), forbidden.end());
  forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());
  // Only subword-minimal forbidden words matter.
  std::vector<Word> minimal;
  for (const Word& w : forbidden) {
    const bool redundant = std::any_of(forbidden.begin(), forbidden.end(), [&](const Word& other) {
      return other.size() < w.size() && is_subsequence(other, w);
    });
    if (!redundant) minimal.push_back(w);
  }
  if (std::any_of(minimal.begin(), minimal.end(), [](const Word& w) { return w.empty(); })) {
    return empty_language(k);
  }

  // Deterministic subsequence matching, one progress counter per forbidden
  // word. Completing any word leads to the (omitted) dead state; every live
  // state accepts.
  using Progress = std::vector<std::uint8_t>;
  Automaton dfa(k);
  std::map<Progress, int> ids;
  std::vector<Progress> states;
  const auto intern = [&](Progress pr) {
    const auto [it, inserted] = ids.emplace(pr, static_cast<int>(states.size()));
    if (inserted) {
      dfa.add_state(true);
      states.push_back(std::move(pr));
    }
    return it->second;
  };
  intern(Progress(minimal.size(), 0));
  for (std::size_t next = 0; next < states.size(); ++next) {
    for (int c = 1; c <= k; ++c) {
      Progress pr = states[next];
      bool dead = false;
      for (std::size_t i = 0; i < minimal.size(); ++i) {
        if (minimal[i][pr[i]] == c && ++pr[i] == minimal[i].size()) dead = true;
      }
      if (dead) continue;
      const int target = intern(std::move(pr));
      dfa.add_transition(static_cast<int>(next), c, target);
    }
  }
  dfa.set_initial(0);
  return minimize(dfa);
}

MonotoneClass::MonotoneClass(SignSequence phi, std::vector<Permutation> basis)
    : phi_(std::move(phi)), basis_(std::move(basis)), acceptor_(closed_subset_acceptor(phi_, basis_)) {}

bool MonotoneClass::contains(const Permutation& p) const {
  if (!in_segment_class(phi_, p)) return false;
  return accepts(acceptor_, greedy_encoding(phi_, p));
}

bool member_monotone(const SignSequence& phi, std::span<const Permutation> basis, const Permutation& p) {
  return MonotoneClass(phi, {basis.begin(), basis.end()}).contains(p);
}

RationalGF gf_monotone(const SignSequence& phi, std::span<const Permutation> basis) {
  return generating_function(intersect(closed_subset_acceptor(phi, basis), greedy_automaton(phi)));
}

}  // namespace permclass
