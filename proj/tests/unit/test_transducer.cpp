#include <doctest.h>

#include <random>
#include <set>

#include "permclass/bounded_class.hpp"
#include "permclass/transducer.hpp"

using namespace permclass;

namespace {

// Encodings over [k] of length <= maxlen, by decoding every permutation.
std::vector<Word> encodings_upto(int k, int maxlen) {
  std::vector<Word> out;
  for (int n = 0; n <= maxlen; ++n) {
    for (const Permutation& p : all_permutations(n)) {
      if (max_rank(p) <= k) out.push_back(rank_encode(p));
    }
  }
  return out;
}

std::set<Word> oracle_deletions(const Word& w) {
  std::set<Word> out;
  const Permutation p = rank_decode(w);
  for (std::size_t i = 1; i <= p.size(); ++i) out.insert(rank_encode(delete_at(p, i)));
  return out;
}

std::set<Word> oracle_patterns(const Word& w) {
  std::set<Word> out;
  const Permutation p = rank_decode(w);
  for (int m = 0; m <= static_cast<int>(p.size()); ++m) {
    for (const Permutation& s : all_permutations(m)) {
      if (involves(s, p)) out.insert(rank_encode(s));
    }
  }
  return out;
}

// A random sub-language of E(Omega_k): the intersection with a random DFA.
Automaton random_encoding_language(std::mt19937& rng, int k) {
  const int n = std::uniform_int_distribution<int>(1, 4)(rng);
  Automaton a(k);
  std::bernoulli_distribution coin(0.5);
  for (int s = 0; s < n; ++s) a.add_state(coin(rng));
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int s = 0; s < n; ++s) {
    for (int c = 1; c <= k; ++c) {
      if (coin(rng) || coin(rng)) a.add_transition(s, c, pick(rng));
    }
  }
  return minimize(intersect(a, omega_acceptor(k)));
}

}  // namespace

TEST_CASE("delete_letter follows the worked example") {
  CHECK(delete_letter(Word{2, 3, 3, 1, 2, 1, 1}, 6) == Word{2, 2, 2, 1, 1, 1});
  CHECK(delete_letter(Word{2, 3, 3, 1, 2, 1, 1}, 6, 3) == Word{2, 2, 2, 1, 1, 1});
  CHECK_THROWS(delete_letter(Word{1}, 2));
}

TEST_CASE("delete_letter matches decode-delete-encode") {
  for (int n = 1; n <= 7; ++n) {
    for (const Permutation& p : all_permutations(n)) {
      const Word w = rank_encode(p);
      for (std::size_t i = 1; i <= p.size(); ++i) {
        const Word expected = rank_encode(delete_at(p, i));
        REQUIRE(delete_letter(w, i) == expected);
        REQUIRE(delete_letter(w, i, max_rank(p)) == expected);
      }
    }
  }
}

TEST_CASE("deletion and involvement relations match the permutation oracle") {
  for (int k = 1; k <= 3; ++k) {
    const Transducer d = deletion_transducer(k);
    const Transducer h = involvement_transducer(k);
    for (const Word& w : encodings_upto(k, 6)) {
      CAPTURE(k);
      CAPTURE(to_string(w));
      const auto from_d = apply(d, w, w.size() + 1);
      std::set<Word> expected = w.empty() ? std::set<Word>{} : oracle_deletions(w);
      REQUIRE(from_d == expected);
      REQUIRE(apply(h, w, w.size() + 1) == oracle_patterns(w));
    }
  }
}

TEST_CASE("involvement transducer states") {
  for (int k = 1; k <= 5; ++k) {
    const auto states = involvement_states(k);
    const Transducer h = involvement_transducer(k);
    REQUIRE(static_cast<int>(states.size()) == h.state_count());
    CHECK(states.front() == std::vector<int>(static_cast<std::size_t>(k - 1), 0));
    for (int s = 0; s < h.state_count(); ++s) CHECK(h.is_final(s));
    CHECK(std::set<std::vector<int>>(states.begin(), states.end()).size() == states.size());
  }
}

TEST_CASE("transpose and identity") {
  const Transducer d = deletion_transducer(2);
  const Transducer dt = transpose(d);
  // (u, v) in D iff (v, u) in D^t.
  for (const Word& w : encodings_upto(2, 5)) {
    for (const Word& v : apply(d, w, 6)) CHECK(apply(dt, v, 6).count(w) == 1);
  }
  const Transducer id = identity_transducer(3);
  CHECK(apply(id, Word{3, 1, 2}, 5) == std::set<Word>{Word{3, 1, 2}});
}

TEST_CASE("image of a finite language") {
  const std::vector<Word> words{{2, 3, 3, 1, 2, 1, 1}};
  const Automaton l = finite_language(3, words, Direction::reversed);
  const Automaton del = image(l, deletion_transducer(3));
  const auto expected = oracle_deletions(words.front());
  const auto got = enumerate_words(del, 8);
  CHECK(std::set<Word>(got.begin(), got.end()) == expected);
  CHECK_THROWS_AS(image(reverse(l), deletion_transducer(3)), MismatchError);
}

TEST_CASE("derivative languages match brute force") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 24; ++trial) {
    const int k = 1 + trial % 3;
    const Automaton l = random_encoding_language(rng, k);
    const DerivativeLanguages dl = derivative_languages(l);
    CHECK(dl.deletions.direction() == Direction::reversed);
    const auto universe = encodings_upto(k, 6);
    std::set<Word> deletions;
    for (const Word& u : universe) {
      if (!u.empty() && accepts(l, u)) {
        for (const Word& v : oracle_deletions(u)) deletions.insert(v);
      }
    }
    for (const Word& w : universe) {
      if (w.size() < 6) REQUIRE(accepts(dl.deletions, w) == (deletions.count(w) == 1));
      const auto dels = w.empty() ? std::set<Word>{} : oracle_deletions(w);
      bool some = false, all = true;
      for (const Word& v : dels) {
        const bool in = accepts(l, v);
        some = some || in;
        all = all && in;
      }
      REQUIRE(accepts(dl.some_deletion_in, w) == some);
      REQUIRE(accepts(dl.all_deletions_in, w) == all);
    }
    // Nothing outside E(Omega_k) in the second and third languages.
    CHECK(is_subset(dl.some_deletion_in, with_direction(omega_acceptor(k), Direction::reversed)));
    CHECK(is_subset(dl.all_deletions_in, with_direction(omega_acceptor(k), Direction::reversed)));
  }
}

TEST_CASE("derivatives of tiny languages") {
  const std::vector<Word> eleven{{1, 1}};
  const DerivativeLanguages d = derivative_languages(finite_language(1, eleven, Direction::reversed));
  CHECK(enumerate_words(d.deletions, 4) == std::vector<Word>{{1}});
  const DerivativeLanguages none = derivative_languages(empty_language(2, Direction::reversed));
  CHECK(is_empty(none.deletions));
  CHECK(is_empty(none.some_deletion_in));
}
