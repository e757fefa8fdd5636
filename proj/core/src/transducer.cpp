#include "permclass/transducer.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "permclass/bounded_class.hpp"

namespace permclass {

Transducer::Transducer(int alphabet, Direction direction) : alphabet_(alphabet), direction_(direction) {
  if (alphabet < 0) throw std::invalid_argument("alphabet size must be non-negative");
}

int Transducer::add_state(bool final) {
  arcs_.emplace_back();
  finals_.push_back(final);
  return state_count() - 1;
}

void Transducer::add_transition(int source, int input, int output, int target) {
  if (source < 0 || source >= state_count() || target < 0 || target >= state_count()) {
    throw std::out_of_range("transition references a missing state");
  }
  if (input < 0 || input > alphabet_ || output < 0 || output > alphabet_) {
    throw std::out_of_range("transducer label outside alphabet [" + std::to_string(alphabet_) + "]");
  }
  auto& out = arcs_[source];
  const TransducerArc arc{input, output, target};
  const auto pos = std::lower_bound(out.begin(), out.end(), arc);
  if (pos == out.end() || *pos != arc) out.insert(pos, arc);
}

void Transducer::set_initial(int state) {
  if (state < 0 || state >= state_count()) throw std::out_of_range("initial state out of range");
  initial_ = state;
}

std::size_t Transducer::transition_count() const {
  std::size_t n = 0;
  for (const auto& out : arcs_) n += out.size();
  return n;
}

Transducer transpose(const Transducer& t) {
  Transducer out(t.alphabet(), t.direction());
  for (int s = 0; s < t.state_count(); ++s) out.add_state(t.is_final(s));
  for (int s = 0; s < t.state_count(); ++s) {
    for (const TransducerArc& arc : t.arcs(s)) out.add_transition(s, arc.output, arc.input, arc.target);
  }
  out.set_initial(t.initial());
  return out;
}

Transducer identity_transducer(int k, Direction direction) {
  Transducer t(k, direction);
  t.add_state(true);
  for (int e = 1; e <= k; ++e) t.add_transition(0, e, e, 0);
  return t;
}

Automaton image(const Automaton& l, const Transducer& t) {
  if (l.alphabet() != t.alphabet()) throw MismatchError("image: alphabet sizes differ");
  if (l.direction() != t.direction()) throw MismatchError("image: reading directions differ");

  Automaton out(t.alphabet(), t.direction());
  std::map<std::pair<int, int>, int> ids;
  std::vector<std::pair<int, int>> pairs;
  const auto intern = [&](int p, int q) {
    const auto [it, inserted] = ids.emplace(std::pair{p, q}, static_cast<int>(pairs.size()));
    if (inserted) {
      out.add_state(t.is_final(p) && l.is_final(q));
      pairs.emplace_back(p, q);
    }
    return it->second;
  };
  intern(t.initial(), l.initial());
  for (std::size_t next = 0; next < pairs.size(); ++next) {
    const auto [p, q] = pairs[next];
    const int from = static_cast<int>(next);
    for (const TransducerArc& arc : t.arcs(p)) {
      if (arc.input == kEpsilon) {
        // The acceptor may stay put on an epsilon input.
        out.add_transition(from, arc.output, intern(arc.target, q));
        continue;
      }
      for (const Arc& step : l.arcs(q)) {
        if (step.label == arc.input) out.add_transition(from, arc.output, intern(arc.target, step.target));
      }
    }
    // Epsilon moves of the acceptor itself pair with the transducer idling.
    for (const Arc& step : l.arcs(q)) {
      if (step.label != kEpsilon) break;
      out.add_transition(from, kEpsilon, intern(p, step.target));
    }
  }
  out.set_initial(0);
  return out;
}

std::set<Word> apply(const Transducer& t, std::span<const int> input, std::size_t max_output) {
  Word in(input.begin(), input.end());
  if (t.direction() == Direction::reversed) std::reverse(in.begin(), in.end());

  using Config = std::tuple<int, std::size_t, Word>;
  std::set<Config> seen;
  std::vector<Config> stack{{t.initial(), 0, {}}};
  seen.insert(stack.back());
  std::set<Word> outputs;
  while (!stack.empty()) {
    auto [s, pos, out] = std::move(stack.back());
    stack.pop_back();
    if (pos == in.size() && t.is_final(s)) outputs.insert(out);
    for (const TransducerArc& arc : t.arcs(s)) {
      std::size_t next_pos = pos;
      if (arc.input != kEpsilon) {
        if (pos == in.size() || in[pos] != arc.input) continue;
        ++next_pos;
      }
      Word next_out = out;
      if (arc.output != kEpsilon) {
        if (next_out.size() == max_output) continue;
        next_out.push_back(arc.output);
      }
      Config config{arc.target, next_pos, std::move(next_out)};
      if (seen.insert(config).second) stack.push_back(std::move(config));
    }
  }
  if (t.direction() == Direction::reversed) {
    std::set<Word> flipped;
    for (Word w : outputs) {
      std::reverse(w.begin(), w.end());
      flipped.insert(std::move(w));
    }
    return flipped;
  }
  return outputs;
}

Transducer deletion_transducer(int k) {
  if (k < 1) throw std::invalid_argument("deletion_transducer needs k >= 1");
  Transducer t(k, Direction::reversed);
  t.add_state(false);  // picking state
  for (int r = 1; r <= k; ++r) t.add_state(true);
  for (int e = 1; e <= k; ++e) {
    t.add_transition(0, e, e, 0);
    t.add_transition(0, e, kEpsilon, e);
  }
  for (int r = 1; r <= k; ++r) {
    for (int e = 1; e <= k; ++e) {
      if (e > r) {
        t.add_transition(r, e, e - 1, r);
      } else {
        t.add_transition(r, e, e, std::min(r + 1, k));
      }
    }
  }
  t.set_initial(0);
  return t;
}

namespace {

// Reachable (0,1)-vectors of the involvement transducer, with their arcs.
struct VectorMachine {
  std::vector<std::vector<int>> states;
  std::vector<std::tuple<int, int, int, int>> arcs;  // source, input, output, target
};

VectorMachine build_vector_machine(int k) {
  VectorMachine m;
  std::map<std::vector<int>, int> ids;
  const auto intern = [&](std::vector<int> v) {
    const auto [it, inserted] = ids.emplace(v, static_cast<int>(m.states.size()));
    if (inserted) m.states.push_back(std::move(v));
    return it->second;
  };
  const auto width = static_cast<std::size_t>(k - 1);
  intern(std::vector<int>(width, 0));
  for (std::size_t next = 0; next < m.states.size(); ++next) {
    for (int e = 1; e <= k; ++e) {
      for (int bit : {1, 0}) {
        std::vector<int> v = m.states[next];
        v.insert(v.begin() + (e - 1), bit);
        v.resize(width);
        int output = kEpsilon;
        if (bit == 0) {
          int below = 0;
          for (int f = 1; f < e; ++f) below += m.states[next][f - 1];
          output = e - below;
        }
        const int target = intern(std::move(v));
        m.arcs.emplace_back(static_cast<int>(next), e, output, target);
      }
    }
  }
  return m;
}

}  // namespace

Transducer involvement_transducer(int k) {
  if (k < 1) throw std::invalid_argument("involvement_transducer needs k >= 1");
  const VectorMachine m = build_vector_machine(k);
  Transducer t(k, Direction::reversed);
  for (std::size_t s = 0; s < m.states.size(); ++s) t.add_state(true);
  for (const auto& [source, input, output, target] : m.arcs) t.add_transition(source, input, output, target);
  t.set_initial(0);
  return t;
}

std::vector<std::vector<int>> involvement_states(int k) {
  if (k < 1) throw std::invalid_argument("involvement_states needs k >= 1");
  return build_vector_machine(k).states;
}

Word delete_letter(std::span<const int> word, std::size_t position, int freeze_at) {
  if (position < 1 || position > word.size()) {
    throw std::out_of_range("position " + std::to_string(position) + " outside 1.." +
                            std::to_string(word.size()));
  }
  Word out(word.begin(), word.end());
  int rank = word[position - 1];
  for (std::size_t j = position - 1; j-- > 0;) {
    if (word[j] > rank) {
      out[j] = word[j] - 1;
    } else if (freeze_at == 0 || rank < freeze_at) {
      ++rank;
    }
  }
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(position - 1));
  return out;
}

DerivativeLanguages derivative_languages(const Automaton& l) {
  const int k = l.alphabet();
  const Automaton lang = with_direction(l, Direction::reversed);
  const Transducer deletion = deletion_transducer(k);
  const Transducer insertion = transpose(deletion);
  const Automaton omega = with_direction(omega_acceptor(k), Direction::reversed);

  Automaton deletions = minimize(image(lang, deletion));
  Automaton some = minimize(intersect(omega, image(lang, insertion)));
  Automaton all = minimize(complement(image(complement(lang), insertion), omega));
  return {std::move(deletions), std::move(some), std::move(all)};
}

}  // namespace permclass
