#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "permclass/automaton.hpp"
#include "permclass/enumeration.hpp"
#include "permclass/permutation.hpp"

namespace permclass {

enum class Sign { increasing, decreasing };

/// Scan pattern of a monotone segment machine, one sign per scan:
/// '+' for an increasing segment, '-' for a decreasing one.
class SignSequence {
 public:
  /// Throws std::invalid_argument on an empty string or a character other
  /// than '+' / '-'.
  explicit SignSequence(const std::string& signs);

  int size() const { return static_cast<int>(signs_.size()); }
  /// 1-indexed.
  Sign operator[](int scan) const { return signs_.at(static_cast<std::size_t>(scan - 1)); }
  std::string to_string() const;

 private:
  std::vector<Sign> signs_;
};

/// Raised by greedy_encoding for a permutation outside W_phi.
class NotInClassError : public std::invalid_argument {
 public:
  NotInClassError(std::size_t position, const std::string& what)
      : std::invalid_argument(what), position_(position) {}
  /// 1-indexed position of the first element no segment can take.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// The permutation produced by a computation word: the values assigned to
/// scan 1, then scan 2, ..., each block sorted in the scan's direction.
/// Throws std::out_of_range for a letter outside [|phi|].
Permutation decode_word(const SignSequence& phi, std::span<const int> word);

/// Every computation word decoding to p, in lexicographic order. Empty iff
/// p is not in W_phi.
std::vector<Word> encodings(const SignSequence& phi, const Permutation& p);

/// Segments chosen as long as possible from the left. Throws
/// NotInClassError if p is not in W_phi.
Word greedy_encoding(const SignSequence& phi, const Permutation& p);

/// True iff p splits into |phi| consecutive monotone segments.
bool in_segment_class(const SignSequence& phi, const Permutation& p);

/// Minimal DFA accepting exactly the greedy encodings of W_phi.
Automaton greedy_automaton(const SignSequence& phi);

/// Minimal DFA for the computation words of W_phi members avoiding every
/// element of `basis`: words with no encoding of a basis element as a
/// scattered subword.
Automaton closed_subset_acceptor(const SignSequence& phi, std::span<const Permutation> basis);

/// A closed subset of W_phi given by a finite basis, with its word acceptor
/// built once for repeated linear-time queries.
class MonotoneClass {
 public:
  MonotoneClass(SignSequence phi, std::vector<Permutation> basis);

  const SignSequence& signs() const { return phi_; }
  const std::vector<Permutation>& basis() const { return basis_; }
  const Automaton& acceptor() const { return acceptor_; }

  bool contains(const Permutation& p) const;

 private:
  SignSequence phi_;
  std::vector<Permutation> basis_;
  Automaton acceptor_;
};

/// Membership in the closed subset of W_phi with the given basis.
bool member_monotone(const SignSequence& phi, std::span<const Permutation> basis, const Permutation& p);

/// Generating function counting permutations (not words) of the class.
RationalGF gf_monotone(const SignSequence& phi, std::span<const Permutation> basis);

}  // namespace permclass
