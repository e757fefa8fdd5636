#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "permclass/automaton.hpp"

using namespace permclass;

namespace {

// Reference simulation working directly on the transition list, reading the
// word in the machine's own direction.
bool naive_accepts(const Automaton& a, const Word& w) {
  const auto ts = a.transitions();
  const auto close = [&](std::set<int> s) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (const Transition& t : ts) {
        if (t.label == kEpsilon && s.count(t.source) && s.insert(t.target).second) grew = true;
      }
    }
    return s;
  };
  std::set<int> cur = close({a.initial()});
  Word order = w;
  if (a.direction() == Direction::reversed) std::reverse(order.begin(), order.end());
  for (int c : order) {
    std::set<int> next;
    for (const Transition& t : ts) {
      if (t.label == c && cur.count(t.source)) next.insert(t.target);
    }
    cur = close(next);
  }
  return std::any_of(cur.begin(), cur.end(), [&](int s) { return a.is_final(s); });
}

std::vector<Word> all_words(int k, int maxlen) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (static_cast<int>(out[i].size()) == maxlen) continue;
    for (int c = 1; c <= k; ++c) {
      Word w = out[i];
      w.push_back(c);
      out.push_back(w);
    }
  }
  return out;
}

Automaton random_nfa(std::mt19937& rng, int k, Direction dir) {
  std::uniform_int_distribution<int> states_d(1, 6);
  const int n = states_d(rng);
  Automaton a(k, dir);
  std::bernoulli_distribution coin(0.3);
  for (int s = 0; s < n; ++s) a.add_state(coin(rng));
  std::uniform_int_distribution<int> pick(0, n - 1), label(0, k);
  const int m = std::uniform_int_distribution<int>(0, 3 * n)(rng);
  for (int i = 0; i < m; ++i) a.add_transition(pick(rng), label(rng), pick(rng));
  a.set_initial(pick(rng));
  return a;
}

// "Contains 22" over [2].
Automaton contains_22() {
  Automaton a(2);
  a.add_state();
  a.add_state();
  a.add_state(true);
  a.add_transition(0, 1, 0);
  a.add_transition(0, 2, 0);
  a.add_transition(0, 2, 1);
  a.add_transition(1, 2, 2);
  a.add_transition(2, 1, 2);
  a.add_transition(2, 2, 2);
  return a;
}

}  // namespace

TEST_CASE("basic construction") {
  Automaton a(2);
  CHECK(a.add_state() == 0);
  CHECK(a.add_state(true) == 1);
  a.add_transition(0, 1, 1);
  a.add_transition(0, 1, 1);
  CHECK(a.transition_count() == 1);
  CHECK(a.is_deterministic());
  CHECK(a.step(0, 1) == 1);
  CHECK(a.step(0, 2) == -1);
  CHECK_THROWS(a.add_transition(0, 3, 1));
  CHECK_THROWS(a.add_transition(0, 1, 5));
  CHECK(accepts(a, Word{1}));
  CHECK_FALSE(accepts(a, Word{}));
  CHECK_THROWS_AS(accepts(a, Word{3}), std::out_of_range);
}

TEST_CASE("contains-22 minimizes to three states") {
  const Automaton m = minimize(determinize(contains_22()));
  CHECK(m.state_count() == 3);
  CHECK(m.is_deterministic());
  CHECK(accepts(m, Word{1, 2, 2, 1}));
  CHECK_FALSE(accepts(m, Word{2, 1, 2}));
  const Automaton c = complement(m);
  CHECK(accepts(c, Word{2, 1, 2}));
  CHECK_FALSE(accepts(c, Word{2, 2}));
}

TEST_CASE("finite languages and enumeration") {
  const std::vector<Word> words{{2, 1}, {1}, {2, 2, 1}};
  for (Direction d : {Direction::forward, Direction::reversed}) {
    const Automaton a = finite_language(2, words, d);
    const auto listed = enumerate_words(a, 5);
    CHECK(listed == std::vector<Word>{{1}, {2, 1}, {2, 2, 1}});
    CHECK(is_finite(a));
  }
  CHECK_FALSE(is_finite(universal_language(1)));
  CHECK(is_empty(empty_language(3)));
  CHECK(is_finite(empty_language(3)));
}

TEST_CASE("reverse keeps the language, mirror reverses it") {
  const Automaton a = finite_language(2, std::vector<Word>{{1, 2}});
  const Automaton r = reverse(a);
  CHECK(r.direction() == Direction::reversed);
  CHECK(accepts(r, Word{1, 2}));
  CHECK_FALSE(accepts(r, Word{2, 1}));
  const Automaton m = mirror(a);
  CHECK(m.direction() == Direction::forward);
  CHECK(accepts(m, Word{2, 1}));
  CHECK_FALSE(accepts(m, Word{1, 2}));
  CHECK(language_equal(with_direction(with_direction(a, Direction::reversed), Direction::forward), a));
  CHECK_THROWS_AS(language_equal(r, a), MismatchError);
}

TEST_CASE("direction mismatch is reported") {
  const Automaton f = universal_language(2, Direction::forward);
  const Automaton r = universal_language(2, Direction::reversed);
  CHECK_THROWS_AS(intersect(f, r), MismatchError);
  CHECK_THROWS_AS(intersect(f, universal_language(3)), MismatchError);
}

TEST_CASE("random NFAs: every operation agrees with direct simulation") {
  std::mt19937 rng(20261017);
  for (int trial = 0; trial < 150; ++trial) {
    const int k = 1 + trial % 3;
    const Direction dir = trial % 2 ? Direction::reversed : Direction::forward;
    const Automaton a = random_nfa(rng, k, dir);
    const Automaton b = random_nfa(rng, k, dir);
    const Automaton d = determinize(a);
    const Automaton m = minimize(a);
    const Automaton c = complement(a);
    const Automaton cw = complement(a, b);
    const Automaton i = intersect(a, b);
    const Automaton t = trim(a);
    const Automaton rv = reverse(a);
    const Automaton mr = mirror(a);
    REQUIRE(d.is_deterministic());
    REQUIRE(m.is_deterministic());
    CHECK(m.state_count() <= std::max(d.state_count(), 1));
    CHECK(minimize(m).state_count() == m.state_count());
    CHECK(language_equal(m, minimize(with_direction(rv, dir))));
    const auto words = all_words(k, 6);
    bool any = false, all_in_b = true;
    for (const Word& w : words) {
      const bool in_a = naive_accepts(a, w), in_b = naive_accepts(b, w);
      Word back(w.rbegin(), w.rend());
      REQUIRE(accepts(a, w) == in_a);
      REQUIRE(accepts(d, w) == in_a);
      REQUIRE(accepts(m, w) == in_a);
      REQUIRE(accepts(t, w) == in_a);
      REQUIRE(accepts(rv, w) == in_a);
      REQUIRE(accepts(mr, back) == in_a);
      REQUIRE(accepts(c, w) == !in_a);
      REQUIRE(accepts(cw, w) == (in_b && !in_a));
      REQUIRE(accepts(i, w) == (in_a && in_b));
      any = any || in_a;
      if (in_a && !in_b) all_in_b = false;
    }
    // Minimal DFAs of at most 7 states: short words witness nonemptiness.
    if (m.state_count() <= 6) {
      CHECK(is_empty(a) == !any);
    }
    if (!all_in_b) CHECK_FALSE(is_subset(a, b));
    CHECK(is_subset(i, a));
    CHECK(is_subset(a, a));
    // Enumeration matches.
    std::vector<Word> expected;
    for (const Word& w : words) {
      if (static_cast<int>(w.size()) <= 4 && naive_accepts(a, w)) expected.push_back(w);
    }
    std::sort(expected.begin(), expected.end(), [](const Word& x, const Word& y) {
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    CHECK(enumerate_words(a, 4) == expected);
  }
}

TEST_CASE("minimal DFAs are canonical") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const Automaton a = random_nfa(rng, 2, Direction::forward);
    // Same language through a different construction.
    const Automaton b = complement(complement(a));
    const Automaton ma = minimize(a), mb = minimize(b);
    CHECK(ma.transitions() == mb.transitions());
    CHECK(ma.finals() == mb.finals());
  }
}

TEST_CASE("widen keeps the language") {
  const Automaton a = contains_22();
  const Automaton w = widen(a, 4);
  CHECK(w.alphabet() == 4);
  CHECK(accepts(w, Word{2, 2}));
  CHECK_FALSE(accepts(w, Word{3, 2, 2}));
  CHECK(epsilon_closure(a, {0}) == std::vector<int>{0});
}
