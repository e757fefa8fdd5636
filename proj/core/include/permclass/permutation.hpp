#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace permclass {

/// A word over the alphabet [k] = {1..k}. Letter 0 is reserved for epsilon
/// in automata and transducers and never appears in a word.
using Word = std::vector<int>;

/// A permutation of 1..n, stored in one-line notation. Positions are
/// 1-indexed in every interface that takes a position.
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `values` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values);

  static Permutation identity(int n);

  /// Parses compact digit strings such as "2451637" (only for n <= 9).
  static Permutation from_digits(const std::string& digits);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  /// 1-indexed access.
  int at(std::size_t position) const { return values_.at(position - 1); }

  std::span<const int> values() const { return values_; }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// Space separated rendering, e.g. "2 4 5 1 6 3 7".
std::string to_string(const Permutation& p);
std::string to_string(const Word& w);

/// Relabels an arbitrary sequence of distinct integers to the permutation
/// that is order isomorphic to it.
Permutation pattern_of(std::span<const int> values);

/// True iff some subsequence of `host` is order isomorphic to `pattern`.
/// Backtracking search; exponential in the worst case.
bool involves(const Permutation& pattern, const Permutation& host);

Permutation inverse(const Permutation& p);

/// Letter i is the rank of p(i) among p(i), p(i+1), ..., p(n).
Word rank_encode(const Permutation& p);

/// Rank encoding restricted to Omega_k. Returns nullopt as soon as some
/// letter would exceed k. Runs in O(n k).
std::optional<Word> rank_encode_bounded(const Permutation& p, int k);

/// Raised when a word is not the rank encoding of any permutation.
class DecodeError : public std::invalid_argument {
 public:
  DecodeError(std::size_t position, const std::string& what)
      : std::invalid_argument(what), position_(position) {}
  /// 1-indexed position of the first offending letter.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// True iff letter n+1-i is at most i for every i, and every letter is >= 1.
bool is_rank_encoding(std::span<const int> word);

/// Inverse of rank_encode. Throws DecodeError naming the offending position.
Permutation rank_decode(std::span<const int> word);

/// Maximum letter of the rank encoding: the least k with p in Omega_k.
int max_rank(const Permutation& p);

/// The pattern of p with position i (1-indexed) removed.
/// Throws std::out_of_range for an invalid position.
Permutation delete_at(const Permutation& p, std::size_t position);

/// All permutations of length n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Exhaustive avoidance class: result[n] lists, in lexicographic order, the
/// permutations of length n avoiding every element of `basis`.
std::vector<std::vector<Permutation>> avoidance_class(std::span<const Permutation> basis,
                                                      int maxlen);

using MembershipPredicate = std::function<bool(const Permutation&)>;

/// Basis elements of a closed set up to a length bound. No claim is made
/// about basis elements longer than `maxlen`.
struct RestrictedBasis {
  int maxlen = 0;
  std::vector<Permutation> elements;
};

/// Raised by brute_basis when the computed set is not an antichain, which
/// means the predicate does not describe a closed set.
class NotClosedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every permutation of length <= maxlen that is not a member but all of
/// whose one-point deletions are members.
RestrictedBasis brute_basis(const MembershipPredicate& member, int maxlen);

/// True iff no element of `perms` involves another.
bool is_antichain(std::span<const Permutation> perms);

}  // namespace permclass
