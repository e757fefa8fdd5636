#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include "permclass/automaton.hpp"

namespace permclass {

struct TransducerArc {
  int input = kEpsilon;
  int output = kEpsilon;
  int target = 0;
  friend auto operator<=>(const TransducerArc&, const TransducerArc&) = default;
};

/// Finite-state relation between words over [k]. Inputs and outputs may be
/// epsilon (label 0). A pair (u, v) is related when some path from the
/// initial state to a final state reads u and writes v; for a reversed
/// transducer both u and v are traversed from their last letter.
class Transducer {
 public:
  explicit Transducer(int alphabet, Direction direction = Direction::reversed);

  int add_state(bool final = false);
  void add_transition(int source, int input, int output, int target);
  void set_initial(int state);

  int alphabet() const { return alphabet_; }
  Direction direction() const { return direction_; }
  int state_count() const { return static_cast<int>(arcs_.size()); }
  int initial() const { return initial_; }
  bool is_final(int state) const { return finals_.at(state); }
  std::span<const TransducerArc> arcs(int state) const { return arcs_.at(state); }
  std::size_t transition_count() const;

 private:
  int alphabet_;
  Direction direction_;
  int initial_ = 0;
  std::vector<std::vector<TransducerArc>> arcs_;
  std::vector<bool> finals_;
};

/// Swaps input and output on every transition.
Transducer transpose(const Transducer& t);

/// Copies every letter unchanged.
Transducer identity_transducer(int k, Direction direction = Direction::reversed);

/// The language { v : (u, v) related for some u in L(l) }, built as the
/// product of the transducer with the acceptor, where the acceptor is
/// allowed to stay put on epsilon input. Throws MismatchError unless both
/// share alphabet and direction.
Automaton image(const Automaton& l, const Transducer& t);

/// Direct simulation of the relation on one input word: every output of
/// length <= max_output reachable on an accepting path.
std::set<Word> apply(const Transducer& t, std::span<const int> input, std::size_t max_output);

/// Deletes one letter from a rank encoding. State 0 copies letters until the
/// deleted one is chosen; state r in 1..k then tracks the rank of the
/// deleted value among the letters read so far, frozen at k.
Transducer deletion_transducer(int k);

/// Deletes any number (including zero) of letters from a rank encoding.
/// States are the reachable (0,1)-vectors of length k-1 that mark the live
/// ranks of deleted values; all states are final.
Transducer involvement_transducer(int k);

/// The (0,1)-vector labelling each state of involvement_transducer(k), in
/// state order.
std::vector<std::vector<int>> involvement_states(int k);

/// Deletes the letter at `position` (1-indexed) from a rank encoding by the
/// right-to-left rank tracking scan. With `freeze_at` the tracked rank stops
/// growing once it reaches that bound, which does not change the result for
/// words over [freeze_at].
Word delete_letter(std::span<const int> word, std::size_t position, int freeze_at = 0);

/// The three languages derived from L subset of E(Omega_k):
/// all one-letter deletions of members, words having some deletion in L, and
/// encodings all of whose deletions are in L.
struct DerivativeLanguages {
  Automaton deletions;
  Automaton some_deletion_in;
  Automaton all_deletions_in;
};

/// Results are reversed-direction machines over the alphabet of `l`.
DerivativeLanguages derivative_languages(const Automaton& l);

}  // namespace permclass
