#pragma once

#include <gmpxx.h>

#include <vector>

#include "permclass/automaton.hpp"
#include "permclass/polynomial.hpp"

namespace permclass {

/// counts[n] = number of accepted words of length n.
using CountSequence = std::vector<mpz_class>;

/// numerator / denominator in lowest terms, denominator constant term +1.
struct RationalGF {
  Polynomial numerator;
  Polynomial denominator;

  friend bool operator==(const RationalGF&, const RationalGF&) = default;
};

/// Builds a normalized GF: divides out the gcd and scales so that the
/// denominator has constant term 1. Throws std::domain_error if that is
/// impossible over the integers.
RationalGF make_gf(const Polynomial& numerator, const Polynomial& denominator);

/// Length counts for n = 0..upto by dynamic programming over the
/// determinized machine.
CountSequence count_words(const Automaton& a, int upto);

/// Exact generating function of the length counts: the transfer matrix A of
/// the minimal DFA gives f(x) = u adj(I - xA) v / det(I - xA), evaluated by
/// fraction-free elimination over Z[x].
RationalGF generating_function(const Automaton& a);

/// Determinant of a square matrix over Z[x] by Bareiss elimination without
/// pivoting. Throws std::domain_error on a zero pivot.
Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> m);

/// a_n = c_1 a_{n-1} + ... + c_d a_{n-d}, valid for every n >= initial.size().
struct LinearRecurrence {
  int order = 0;
  std::vector<mpz_class> coefficients;  ///< c_1 .. c_d
  std::vector<mpz_class> initial;       ///< a_0 .. a_{m-1}
};

LinearRecurrence linear_recurrence(const RationalGF& gf);

/// Taylor coefficients a_0 .. a_upto. Requires denominator constant term 1.
CountSequence expand(const RationalGF& gf, int upto);

}  // namespace permclass
