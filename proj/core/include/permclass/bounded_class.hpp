#pragma once

#include <span>
#include <vector>

#include "permclass/automaton.hpp"
#include "permclass/permutation.hpp"

namespace permclass {

/// Minimal forward DFA for E(Omega_k), the rank encodings of permutations
/// whose every letter is at most k. Built as the complement of [k]* F, where
/// F holds the words of length < k that are not encodings.
Automaton omega_acceptor(int k);

/// Decides whether L is E(X) for some closed X inside Omega_k: every
/// one-letter deletion of a member stays in L, and L is inside E(Omega_k).
bool is_closed_language(const Automaton& l, int k);

/// A closed subset X of Omega_k, held as minimal DFAs for E(X) in both
/// reading directions. Immutable once built.
class BoundedClass {
 public:
  /// Validates closedness; throws std::invalid_argument otherwise.
  static BoundedClass from_language(const Automaton& l, int k);

  int bound() const { return k_; }
  /// Reversed-direction minimal DFA (the transducer-native form).
  const Automaton& acceptor() const { return reversed_; }
  /// Forward minimal DFA, used for linear-time membership.
  const Automaton& forward_acceptor() const { return forward_; }

 private:
  BoundedClass(Automaton language, int k);
  friend BoundedClass closed_from_basis(const Automaton& basis, int k);

  int k_;
  Automaton reversed_;
  Automaton forward_;
};

/// Acceptor of E(B), where B is the basis of X restricted to permutations
/// that lie in Omega_k (the only ones with an encoding over [k]).
Automaton basis_from_closed(const BoundedClass& x);

/// The class of permutations in Omega_k avoiding every permutation encoded
/// in L(basis). Any generating set works; it need not be an antichain.
/// Throws std::invalid_argument if L(basis) is not inside E(Omega_k).
BoundedClass closed_from_basis(const Automaton& basis, int k);

/// Permutation form. Basis permutations with max_rank > k are implied by
/// Omega_k itself (each contains a basis element of Omega_k) and are skipped;
/// use split_by_bound to report them.
BoundedClass closed_from_basis(std::span<const Permutation> basis, int k);

struct BoundSplit {
  std::vector<Permutation> encodable;  ///< max_rank <= k
  std::vector<Permutation> implied;    ///< max_rank > k
};
BoundSplit split_by_bound(std::span<const Permutation> perms, int k);

bool is_finitely_based(const BoundedClass& x);

/// Linear-time membership: bounded rank encoding, then one DFA pass.
bool member(const BoundedClass& x, const Permutation& p);

/// The basis elements of X that fall outside Omega_k. These are exactly the
/// permutations (k+1, a_1, ..., a_k) all of whose one-point deletions lie
/// in X. Together with basis_from_closed this gives the whole basis.
std::vector<Permutation> omega_boundary_basis(const BoundedClass& x);

/// Decodes the encodable basis up to a length bound and appends the boundary
/// elements; sorted by length then lexicographically.
std::vector<Permutation> list_basis(const BoundedClass& x, int maxlen);

}  // namespace permclass
