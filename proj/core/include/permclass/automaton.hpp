#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "permclass/permutation.hpp"

namespace permclass {

/// Label 0 marks an epsilon move.
inline constexpr int kEpsilon = 0;

/// Which end of a word a machine starts consuming from. A `reversed`
/// machine reads its input from the last letter to the first, so the labels
/// along an accepting path spell the accepted word backwards.
enum class Direction { forward, reversed };

Direction opposite(Direction d);

struct Transition {
  int source = 0;
  int label = kEpsilon;
  int target = 0;
  friend auto operator<=>(const Transition&, const Transition&) = default;
};

struct Arc {
  int label = kEpsilon;
  int target = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Raised when two machines cannot be combined: different alphabets or
/// different reading directions.
class MismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Nondeterministic finite acceptor over [k] with epsilon moves.
///
/// The language of an automaton is the set of words w (written left to
/// right) that `accepts` returns true for; this honours the direction flag,
/// so a reversed machine and its forward counterpart can share a language.
class Automaton {
 public:
  explicit Automaton(int alphabet, Direction direction = Direction::forward);

  int add_state(bool final = false);
  void add_transition(int source, int label, int target);
  void set_initial(int state);
  void set_final(int state, bool final = true);

  int alphabet() const { return alphabet_; }
  Direction direction() const { return direction_; }
  int state_count() const { return static_cast<int>(arcs_.size()); }
  int initial() const { return initial_; }
  bool is_final(int state) const { return finals_.at(state); }
  std::vector<int> finals() const;

  /// Outgoing arcs sorted by (label, target).
  std::span<const Arc> arcs(int state) const { return arcs_.at(state); }

  /// All transitions in (source, label, target) order.
  std::vector<Transition> transitions() const;
  std::size_t transition_count() const;

  /// No epsilon moves and at most one arc per (state, label).
  bool is_deterministic() const;

  /// Successor under `label` in a deterministic machine, or -1.
  int step(int state, int label) const;

 private:
  int alphabet_;
  Direction direction_;
  int initial_ = 0;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<bool> finals_;
};

/// Accepts every word over [k].
Automaton universal_language(int alphabet, Direction direction = Direction::forward);

/// Accepts nothing; a single rejecting state.
Automaton empty_language(int alphabet, Direction direction = Direction::forward);

/// Accepts exactly the given finite set of words (a trie, read in `direction`).
Automaton finite_language(int alphabet, std::span<const Word> words,
                          Direction direction = Direction::forward);

/// Same machine over a larger alphabet; extra letters have no arcs.
Automaton widen(const Automaton& a, int alphabet);

/// States reachable from `states` by epsilon moves, sorted.
std::vector<int> epsilon_closure(const Automaton& a, std::vector<int> states);

/// Subset construction. The result is epsilon free and deterministic but not
/// necessarily complete (the empty subset is never materialised). States are
/// numbered in breadth-first discovery order, letters ascending.
Automaton determinize(const Automaton& a);

/// Minimal trim DFA for the language, numbered canonically. The empty
/// language gives a single rejecting state.
Automaton minimize(const Automaton& a);

/// Complete DFA for [k]* minus L(a) or, with `within`, L(within) minus L(a).
Automaton complement(const Automaton& a);
Automaton complement(const Automaton& a, const Automaton& within);

/// Product construction; epsilon moves are interleaved.
Automaton intersect(const Automaton& a, const Automaton& b);

/// Reverses every transition and toggles the direction flag. The accepted
/// language is unchanged; only the reading order of the machine flips.
Automaton reverse(const Automaton& a);

/// Reverses every transition but keeps the direction flag, so the result
/// accepts the mirror image of every word.
Automaton mirror(const Automaton& a);

/// Same language, read in the requested direction.
Automaton with_direction(const Automaton& a, Direction direction);

/// Keeps only states that are reachable and co-reachable. The initial state
/// is always kept.
Automaton trim(const Automaton& a);

bool is_empty(const Automaton& a);
bool is_finite(const Automaton& a);
bool is_subset(const Automaton& a, const Automaton& b);
bool language_equal(const Automaton& a, const Automaton& b);

/// Membership test. Linear in |w| for deterministic machines. Throws
/// std::out_of_range for a letter outside [k].
bool accepts(const Automaton& a, std::span<const int> word);

/// All accepted words of length <= maxlen, each written left to right,
/// sorted by length then lexicographically.
std::vector<Word> enumerate_words(const Automaton& a, int maxlen);

}  // namespace permclass
