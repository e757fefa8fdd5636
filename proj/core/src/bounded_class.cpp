#include "permclass/bounded_class.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "permclass/transducer.hpp"

namespace permclass {

Automaton omega_acceptor(int k) {
  if (k < 1) throw std::invalid_argument("omega_acceptor needs k >= 1");
  // NFA for [k]* F. A word fails the encoding condition exactly when, for some
  // i < k, its suffix of length i starts with a letter larger than i. State 0
  // loops on every letter; countdown state c accepts after exactly c more
  // letters.
  Automaton bad(k);
  const int loop = bad.add_state(false);
  std::vector<int> countdown;
  for (int c = 0; c < k - 1; ++c) countdown.push_back(bad.add_state(c == 0));
  for (int e = 1; e <= k; ++e) bad.add_transition(loop, e, loop);
  for (int c = 1; c < k - 1; ++c) {
    for (int e = 1; e <= k; ++e) bad.add_transition(countdown[c], e, countdown[c - 1]);
  }
  for (int i = 1; i <= k - 1; ++i) {
    for (int e = i + 1; e <= k; ++e) bad.add_transition(loop, e, countdown[i - 1]);
  }
  bad.set_initial(loop);
  return minimize(complement(bad));
}

bool is_closed_language(const Automaton& l, int k) {
  const int width = std::max(k, l.alphabet());
  const Automaton lang = with_direction(widen(l, width), Direction::reversed);
  const Automaton omega = with_direction(widen(omega_acceptor(k), width), Direction::reversed);
  if (!is_subset(lang, omega)) return false;
  return is_subset(image(lang, deletion_transducer(width)), lang);
}

BoundedClass::BoundedClass(Automaton language, int k)
    : k_(k),
      reversed_(minimize(with_direction(language, Direction::reversed))),
      forward_(minimize(with_direction(language, Direction::forward))) {}

BoundedClass BoundedClass::from_language(const Automaton& l, int k) {
  if (k < 1) throw std::invalid_argument("class bound must be >= 1");
  if (l.alphabet() > k) {
    throw std::invalid_argument("language alphabet " + std::to_string(l.alphabet()) + " exceeds k = " +
                                std::to_string(k));
  }
  const Automaton lang = widen(l, k);
  if (!is_closed_language(lang, k)) {
    throw std::invalid_argument("language is not the encoding of a closed subset of Omega_" +
                                std::to_string(k));
  }
  return BoundedClass(lang, k);
}

Automaton basis_from_closed(const BoundedClass& x) {
  const Automaton& lang = x.acceptor();
  const DerivativeLanguages parts = derivative_languages(lang);
  return minimize(intersect(complement(lang), parts.all_deletions_in));
}

BoundedClass closed_from_basis(const Automaton& basis, int k) {
  if (k < 1) throw std::invalid_argument("class bound must be >= 1");
  if (basis.alphabet() > k) {
    throw std::invalid_argument("basis alphabet " + std::to_string(basis.alphabet()) + " exceeds k = " +
                                std::to_string(k));
  }
  const Automaton b = with_direction(widen(basis, k), Direction::reversed);
  const Automaton omega = with_direction(omega_acceptor(k), Direction::reversed);
  if (!is_subset(b, omega)) {
    throw std::invalid_argument("basis language contains words that encode no permutation");
  }
  // Words with some basis encoding below them in the involvement order.
  const Automaton above = image(b, transpose(involvement_transducer(k)));
  return BoundedClass(complement(above, omega), k);
}

BoundSplit split_by_bound(std::span<const Permutation> perms, int k) {
  BoundSplit split;
  for (const Permutation& p : perms) {
    (max_rank(p) <= k ? split.encodable : split.implied).push_back(p);
  }
  return split;
}

BoundedClass closed_from_basis(std::span<const Permutation> basis, int k) {
  const BoundSplit split = split_by_bound(basis, k);
  std::vector<Word> words;
  words.reserve(split.encodable.size());
  for (const Permutation& p : split.encodable) words.push_back(rank_encode(p));
  return closed_from_basis(finite_language(k, words), k);
}

bool is_finitely_based(const BoundedClass& x) { return is_finite(basis_from_closed(x)); }

bool member(const BoundedClass& x, const Permutation& p) {
  const auto word = rank_encode_bounded(p, x.bound());
  return word && accepts(x.forward_acceptor(), *word);
}

std::vector<Permutation> omega_boundary_basis(const BoundedClass& x) {
  const int k = x.bound();
  std::vector<Permutation> out;
  for (const Permutation& tail : all_permutations(k)) {
    std::vector<int> values{k + 1};
    values.insert(values.end(), tail.begin(), tail.end());
    Permutation candidate(std::move(values));
    bool minimal = true;
    for (std::size_t i = 1; i <= candidate.size() && minimal; ++i) {
      minimal = member(x, delete_at(candidate, i));
    }
    if (minimal) out.push_back(std::move(candidate));
  }
  return out;
}

std::vector<Permutation> list_basis(const BoundedClass& x, int maxlen) {
  std::vector<Permutation> out;
  for (const Word& w : enumerate_words(basis_from_closed(x), maxlen)) out.push_back(rank_decode(w));
  if (x.bound() + 1 <= maxlen) {
    for (Permutation& p : omega_boundary_basis(x)) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [](const Permutation& a, const Permutation& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace permclass
