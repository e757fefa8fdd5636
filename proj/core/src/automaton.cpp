#include "permclass/automaton.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>
#include <utility>

namespace permclass {

Direction opposite(Direction d) {
  return d == Direction::forward ? Direction::reversed : Direction::forward;
}

Automaton::Automaton(int alphabet, Direction direction) : alphabet_(alphabet), direction_(direction) {
  if (alphabet < 0) throw std::invalid_argument("alphabet size must be non-negative");
}

int Automaton::add_state(bool final) {
  arcs_.emplace_back();
  finals_.push_back(final);
  return state_count() - 1;
}

void Automaton::add_transition(int source, int label, int target) {
  if (source < 0 || source >= state_count() || target < 0 || target >= state_count()) {
    throw std::out_of_range("transition references a missing state");
  }
  if (label < 0 || label > alphabet_) {
    throw std::out_of_range("label " + std::to_string(label) + " outside alphabet [" +
                            std::to_string(alphabet_) + "]");
  }
  auto& out = arcs_[source];
  const Arc arc{label, target};
  const auto pos = std::lower_bound(out.begin(), out.end(), arc);
  if (pos == out.end() || *pos != arc) out.insert(pos, arc);
}

void Automaton::set_initial(int state) {
  if (state < 0 || state >= state_count()) throw std::out_of_range("initial state out of range");
  initial_ = state;
}

void Automaton::set_final(int state, bool final) { finals_.at(state) = final; }

std::vector<int> Automaton::finals() const {
  std::vector<int> out;
  for (int s = 0; s < state_count(); ++s) {
    if (finals_[s]) out.push_back(s);
  }
  return out;
}

std::vector<Transition> Automaton::transitions() const {
  std::vector<Transition> out;
  for (int s = 0; s < state_count(); ++s) {
    for (const Arc& arc : arcs_[s]) out.push_back({s, arc.label, arc.target});
  }
  return out;
}

std::size_t Automaton::transition_count() const {
  std::size_t n = 0;
  for (const auto& out : arcs_) n += out.size();
  return n;
}

bool Automaton::is_deterministic() const {
  for (const auto& out : arcs_) {
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].label == kEpsilon) return false;
      if (i > 0 && out[i - 1].label == out[i].label) return false;
    }
  }
  return true;
}

int Automaton::step(int state, int label) const {
  for (const Arc& arc : arcs_[state]) {
    if (arc.label == label) return arc.target;
    if (arc.label > label) break;
  }
  return -1;
}

namespace {

void require_compatible(const Automaton& a, const Automaton& b, const char* op) {
  if (a.alphabet() != b.alphabet()) {
    throw MismatchError(std::string(op) + ": alphabet sizes differ (" + std::to_string(a.alphabet()) +
                        " vs " + std::to_string(b.alphabet()) + ")");
  }
  if (a.direction() != b.direction()) {
    throw MismatchError(std::string(op) + ": reading directions differ");
  }
}

// Renumbers states in breadth-first order from the initial state, following
// arcs in (label, target) order. Unreachable states are dropped.
Automaton canonical(const Automaton& a) {
  std::vector<int> id(a.state_count(), -1);
  std::vector<int> order;
  std::queue<int> queue;
  id[a.initial()] = 0;
  order.push_back(a.initial());
  queue.push(a.initial());
  while (!queue.empty()) {
    const int s = queue.front();
    queue.pop();
    for (const Arc& arc : a.arcs(s)) {
      if (id[arc.target] < 0) {
        id[arc.target] = static_cast<int>(order.size());
        order.push_back(arc.target);
        queue.push(arc.target);
      }
    }
  }
  Automaton out(a.alphabet(), a.direction());
  for (int s : order) out.add_state(a.is_final(s));
  for (int s : order) {
    for (const Arc& arc : a.arcs(s)) out.add_transition(id[s], arc.label, id[arc.target]);
  }
  out.set_initial(0);
  return out;
}

std::vector<bool> reachable_from(const Automaton& a, int start) {
  std::vector<bool> seen(a.state_count(), false);
  std::vector<int> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    const int s = stack.back();
    stack.pop_back();
    for (const Arc& arc : a.arcs(s)) {
      if (!seen[arc.target]) {
        seen[arc.target] = true;
        stack.push_back(arc.target);
      }
    }
  }
  return seen;
}

std::vector<bool> coreachable(const Automaton& a) {
  std::vector<std::vector<int>> back(a.state_count());
  for (const Transition& t : a.transitions()) back[t.target].push_back(t.source);
  std::vector<bool> seen(a.state_count(), false);
  std::vector<int> stack = a.finals();
  for (int s : stack) seen[s] = true;
  while (!stack.empty()) {
    const int s = stack.back();
    stack.pop_back();
    for (int p : back[s]) {
      if (!seen[p]) {
        seen[p] = true;
        stack.push_back(p);
      }
    }
  }
  return seen;
}

}  // namespace

Automaton universal_language(int alphabet, Direction direction) {
  Automaton a(alphabet, direction);
  a.add_state(true);
  for (int c = 1; c <= alphabet; ++c) a.add_transition(0, c, 0);
  return a;
}

Automaton empty_language(int alphabet, Direction direction) {
  Automaton a(alphabet, direction);
  a.add_state(false);
  return a;
}

Automaton finite_language(int alphabet, std::span<const Word> words, Direction direction) {
  Automaton a(alphabet, direction);
  a.add_state(false);
  for (const Word& w : words) {
    int s = 0;
    const auto visit = [&](int c) {
      if (c < 1 || c > alphabet) {
        throw std::out_of_range("letter " + std::to_string(c) + " outside alphabet [" +
                                std::to_string(alphabet) + "]");
      }
      int next = a.step(s, c);
      if (next < 0) {
        next = a.add_state(false);
        a.add_transition(s, c, next);
      }
      s = next;
    };
    if (direction == Direction::forward) {
      std::for_each(w.begin(), w.end(), visit);
    } else {
      std::for_each(w.rbegin(), w.rend(), visit);
    }
    a.set_final(s);
  }
  return a;
}

Automaton widen(const Automaton& a, int alphabet) {
  if (alphabet < a.alphabet()) throw std::invalid_argument("widen cannot shrink an alphabet");
  Automaton out(alphabet, a.direction());
  for (int s = 0; s < a.state_count(); ++s) out.add_state(a.is_final(s));
  for (const Transition& t : a.transitions()) out.add_transition(t.source, t.label, t.target);
  out.set_initial(a.initial());
  return out;
}

std::vector<int> epsilon_closure(const Automaton& a, std::vector<int> states) {
  std::vector<bool> seen(a.state_count(), false);
  for (int s : states) seen[s] = true;
  std::vector<int> stack = states;
  while (!stack.empty()) {
    const int s = stack.back();
    stack.pop_back();
    for (const Arc& arc : a.arcs(s)) {
      if (arc.label != kEpsilon) break;
      if (!seen[arc.target]) {
        seen[arc.target] = true;
        states.push_back(arc.target);
        stack.push_back(arc.target);
      }
    }
  }
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());
  return states;
}

Automaton determinize(const Automaton& a) {
  Automaton out(a.alphabet(), a.direction());
  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> subsets;
  const auto intern = [&](std::vector<int> subset) {
    const auto [it, inserted] = ids.emplace(subset, static_cast<int>(subsets.size()));
    if (inserted) {
      const bool final = std::any_of(subset.begin(), subset.end(), [&](int s) { return a.is_final(s); });
      out.add_state(final);
      subsets.push_back(std::move(subset));
    }
    return it->second;
  };
  intern(epsilon_closure(a, {a.initial()}));
  for (std::size_t next = 0; next < subsets.size(); ++next) {
    for (int c = 1; c <= a.alphabet(); ++c) {
      std::vector<int> moved;
      for (int s : subsets[next]) {
        for (const Arc& arc : a.arcs(s)) {
          if (arc.label == c) moved.push_back(arc.target);
        }
      }
      if (moved.empty()) continue;
      const int target = intern(epsilon_closure(a, std::move(moved)));
      out.add_transition(static_cast<int>(next), c, target);
    }
  }
  out.set_initial(0);
  return out;
}

Automaton trim(const Automaton& a) {
  const auto forward = reachable_from(a, a.initial());
  const auto backward = coreachable(a);
  std::vector<int> id(a.state_count(), -1);
  Automaton out(a.alphabet(), a.direction());
  for (int s = 0; s < a.state_count(); ++s) {
    if ((forward[s] && backward[s]) || s == a.initial()) id[s] = out.add_state(a.is_final(s));
  }
  for (const Transition& t : a.transitions()) {
    if (id[t.source] >= 0 && id[t.target] >= 0) out.add_transition(id[t.source], t.label, id[t.target]);
  }
  out.set_initial(id[a.initial()]);
  return out;
}

Automaton minimize(const Automaton& a) {
  const Automaton d = trim(determinize(a));
  if (is_empty(d)) return empty_language(a.alphabet(), a.direction());

  // Moore refinement on a partial DFA; a missing arc leads to the implicit
  // dead class -1.
  const int n = d.state_count();
  std::vector<int> block(n);
  for (int s = 0; s < n; ++s) block[s] = d.is_final(s) ? 1 : 0;
  int block_count = 0;
  for (;;) {
    std::map<std::vector<int>, int> signature_ids;
    std::vector<int> next(n);
    for (int s = 0; s < n; ++s) {
      std::vector<int> signature{block[s]};
      signature.reserve(static_cast<std::size_t>(d.alphabet()) + 1);
      for (int c = 1; c <= d.alphabet(); ++c) {
        const int t = d.step(s, c);
        signature.push_back(t < 0 ? -1 : block[t]);
      }
      next[s] = signature_ids.emplace(std::move(signature), static_cast<int>(signature_ids.size()))
                    .first->second;
    }
    const int count = static_cast<int>(signature_ids.size());
    block = std::move(next);
    if (count == block_count) break;
    block_count = count;
  }

  Automaton quotient(d.alphabet(), d.direction());
  for (int b = 0; b < block_count; ++b) quotient.add_state(false);
  for (int s = 0; s < n; ++s) {
    if (d.is_final(s)) quotient.set_final(block[s]);
    for (const Arc& arc : d.arcs(s)) quotient.add_transition(block[s], arc.label, block[arc.target]);
  }
  quotient.set_initial(block[d.initial()]);
  return canonical(quotient);
}

Automaton complement(const Automaton& a) {
  Automaton d = determinize(a);
  int sink = -1;
  const int n = d.state_count();
  for (int s = 0; s < n; ++s) {
    for (int c = 1; c <= d.alphabet(); ++c) {
      if (d.step(s, c) >= 0) continue;
      if (sink < 0) {
        sink = d.add_state(false);
        for (int x = 1; x <= d.alphabet(); ++x) d.add_transition(sink, x, sink);
      }
      d.add_transition(s, c, sink);
    }
  }
  for (int s = 0; s < d.state_count(); ++s) d.set_final(s, !d.is_final(s));
  return d;
}

Automaton complement(const Automaton& a, const Automaton& within) {
  require_compatible(a, within, "complement");
  return intersect(within, complement(a));
}

Automaton intersect(const Automaton& a, const Automaton& b) {
  require_compatible(a, b, "intersect");
  Automaton out(a.alphabet(), a.direction());
  std::map<std::pair<int, int>, int> ids;
  std::vector<std::pair<int, int>> pairs;
  const auto intern = [&](int p, int q) {
    const auto [it, inserted] = ids.emplace(std::pair{p, q}, static_cast<int>(pairs.size()));
    if (inserted) {
      out.add_state(a.is_final(p) && b.is_final(q));
      pairs.emplace_back(p, q);
    }
    return it->second;
  };
  intern(a.initial(), b.initial());
  for (std::size_t next = 0; next < pairs.size(); ++next) {
    const auto [p, q] = pairs[next];
    const int from = static_cast<int>(next);
    for (const Arc& x : a.arcs(p)) {
      if (x.label == kEpsilon) {
        out.add_transition(from, kEpsilon, intern(x.target, q));
        continue;
      }
      for (const Arc& y : b.arcs(q)) {
        if (y.label == x.label) out.add_transition(from, x.label, intern(x.target, y.target));
      }
    }
    for (const Arc& y : b.arcs(q)) {
      if (y.label != kEpsilon) break;
      out.add_transition(from, kEpsilon, intern(p, y.target));
    }
  }
  out.set_initial(0);
  return out;
}

Automaton mirror(const Automaton& a) {
  Automaton out(a.alphabet(), a.direction());
  for (int s = 0; s < a.state_count(); ++s) out.add_state(s == a.initial());
  for (const Transition& t : a.transitions()) out.add_transition(t.target, t.label, t.source);
  const auto finals = a.finals();
  if (finals.size() == 1) {
    out.set_initial(finals.front());
  } else {
    const int start = out.add_state(false);
    for (int f : finals) out.add_transition(start, kEpsilon, f);
    out.set_initial(start);
  }
  return out;
}

Automaton reverse(const Automaton& a) {
  const Automaton m = mirror(a);
  Automaton out(m.alphabet(), opposite(a.direction()));
  for (int s = 0; s < m.state_count(); ++s) out.add_state(m.is_final(s));
  for (const Transition& t : m.transitions()) out.add_transition(t.source, t.label, t.target);
  out.set_initial(m.initial());
  return out;
}

Automaton with_direction(const Automaton& a, Direction direction) {
  return a.direction() == direction ? a : reverse(a);
}

bool is_empty(const Automaton& a) {
  const auto seen = reachable_from(a, a.initial());
  for (int s = 0; s < a.state_count(); ++s) {
    if (seen[s] && a.is_final(s)) return false;
  }
  return true;
}

bool is_finite(const Automaton& a) {
  const Automaton t = trim(determinize(a));
  if (is_empty(t)) return true;
  // Any cycle in a trim epsilon-free machine yields infinitely many words.
  enum Colour { white, grey, black };
  std::vector<Colour> colour(t.state_count(), white);
  std::vector<std::pair<int, std::size_t>> stack{{t.initial(), 0}};
  colour[t.initial()] = grey;
  while (!stack.empty()) {
    auto& [s, i] = stack.back();
    const auto out = t.arcs(s);
    if (i == out.size()) {
      colour[s] = black;
      stack.pop_back();
      continue;
    }
    const int next = out[i++].target;
    if (colour[next] == grey) return false;
    if (colour[next] == white) {
      colour[next] = grey;
      stack.emplace_back(next, 0);
    }
  }
  return true;
}

bool is_subset(const Automaton& a, const Automaton& b) {
  require_compatible(a, b, "is_subset");
  return is_empty(intersect(a, complement(b)));
}

bool language_equal(const Automaton& a, const Automaton& b) { return is_subset(a, b) && is_subset(b, a); }

bool accepts(const Automaton& a, std::span<const int> word) {
  for (int c : word) {
    if (c < 1 || c > a.alphabet()) {
      throw std::out_of_range("letter " + std::to_string(c) + " outside alphabet [" +
                              std::to_string(a.alphabet()) + "]");
    }
  }
  const bool backwards = a.direction() == Direction::reversed;
  const std::size_t n = word.size();
  const auto letter = [&](std::size_t i) { return backwards ? word[n - 1 - i] : word[i]; };

  if (a.is_deterministic()) {
    int s = a.initial();
    for (std::size_t i = 0; i < n && s >= 0; ++i) s = a.step(s, letter(i));
    return s >= 0 && a.is_final(s);
  }
  std::vector<int> current = epsilon_closure(a, {a.initial()});
  for (std::size_t i = 0; i < n && !current.empty(); ++i) {
    std::vector<int> moved;
    for (int s : current) {
      for (const Arc& arc : a.arcs(s)) {
        if (arc.label == letter(i)) moved.push_back(arc.target);
      }
    }
    current = epsilon_closure(a, std::move(moved));
  }
  return std::any_of(current.begin(), current.end(), [&](int s) { return a.is_final(s); });
}

std::vector<Word> enumerate_words(const Automaton& a, int maxlen) {
  const Automaton d = trim(determinize(a));
  std::vector<Word> words;
  Word path;
  const auto walk = [&](auto&& self, int s) -> void {
    if (d.is_final(s)) words.push_back(path);
    if (static_cast<int>(path.size()) == maxlen) return;
    for (const Arc& arc : d.arcs(s)) {
      path.push_back(arc.label);
      self(self, arc.target);
      path.pop_back();
    }
  };
  walk(walk, d.initial());
  if (a.direction() == Direction::reversed) {
    for (Word& w : words) std::reverse(w.begin(), w.end());
  }
  std::sort(words.begin(), words.end(), [](const Word& x, const Word& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return words;
}

}  // namespace permclass
