#include "permclass/enumeration.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace permclass {

namespace {

// Fraction-free elimination without row exchanges. Returns the leading
// principal minors d_1 .. d_n of the input (the last one is the determinant).
std::vector<Polynomial> leading_minors(std::vector<std::vector<Polynomial>> m) {
  const std::size_t n = m.size();
  std::vector<Polynomial> minors;
  minors.reserve(n);
  Polynomial previous = Polynomial::constant(1);
  for (std::size_t k = 0; k < n; ++k) {
    minors.push_back(m[k][k]);
    if (k + 1 == n) break;
    const Polynomial pivot = m[k][k];
    if (pivot.is_zero()) throw std::domain_error("zero pivot in fraction-free elimination");
    for (std::size_t i = k + 1; i < n; ++i) {
      const Polynomial factor = m[i][k];
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial value = m[i][j] * pivot;
        if (!factor.is_zero() && !m[k][j].is_zero()) value -= factor * m[k][j];
        m[i][j] = exact_divide(value, previous);
      }
      m[i][k] = Polynomial();
    }
    previous = pivot;
  }
  return minors;
}

}  // namespace

Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> m) {
  if (m.empty()) return Polynomial::constant(1);
  for (const auto& row : m) {
    if (row.size() != m.size()) throw std::invalid_argument("determinant of a non-square matrix");
  }
  return leading_minors(std::move(m)).back();
}

RationalGF make_gf(const Polynomial& numerator, const Polynomial& denominator) {
  if (denominator.is_zero()) throw std::domain_error("zero denominator");
  if (numerator.is_zero()) return {Polynomial(), Polynomial::constant(1)};
  const Polynomial g = gcd(numerator, denominator);
  Polynomial num = exact_divide(numerator, g);
  Polynomial den = exact_divide(denominator, g);
  mpz_class c = den[0];
  if (c == 0) throw std::domain_error("denominator vanishes at zero; not a power series");
  if (c < 0) {
    num = -num;
    den = -den;
    c = -c;
  }
  if (c != 1) {
    for (const auto& x : num.coefficients()) {
      if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) throw std::domain_error("non-integral series");
    }
    for (const auto& x : den.coefficients()) {
      if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) throw std::domain_error("non-integral series");
    }
    num = exact_divide(num, Polynomial::constant(c));
    den = exact_divide(den, Polynomial::constant(c));
  }
  return {std::move(num), std::move(den)};
}

CountSequence count_words(const Automaton& a, int upto) {
  const Automaton d = determinize(a);
  CountSequence counts;
  counts.reserve(static_cast<std::size_t>(std::max(upto, 0)) + 1);
  std::vector<mpz_class> current(d.state_count());
  current[d.initial()] = 1;
  for (int n = 0; n <= upto; ++n) {
    mpz_class total = 0;
    for (int s = 0; s < d.state_count(); ++s) {
      if (d.is_final(s)) total += current[s];
    }
    counts.push_back(std::move(total));
    if (n == upto) break;
    std::vector<mpz_class> next(d.state_count());
    for (int s = 0; s < d.state_count(); ++s) {
      if (current[s] == 0) continue;
      for (const Arc& arc : d.arcs(s)) next[arc.target] += current[s];
    }
    current = std::move(next);
  }
  return counts;
}

RationalGF generating_function(const Automaton& a) {
  const Automaton d = minimize(a);
  if (is_empty(d)) return {Polynomial(), Polynomial::constant(1)};

  // Bordered matrix [[I - xA, v], [u, 0]]: its leading minor of order n is
  // det(I - xA), and its determinant is -u adj(I - xA) v.
  const auto n = static_cast<std::size_t>(d.state_count());
  std::vector<std::vector<Polynomial>> m(n + 1, std::vector<Polynomial>(n + 1));
  std::vector<std::vector<long>> transfer(n, std::vector<long>(n, 0));
  for (const Transition& t : d.transitions()) ++transfer[t.source][t.target];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = Polynomial{i == j ? 1L : 0L, -transfer[i][j]};
    }
    m[i][n] = Polynomial{d.is_final(static_cast<int>(i)) ? 1L : 0L};
  }
  m[n][static_cast<std::size_t>(d.initial())] = Polynomial{1};

  const std::vector<Polynomial> minors = leading_minors(std::move(m));
  return make_gf(-minors[n], minors[n - 1]);
}

LinearRecurrence linear_recurrence(const RationalGF& gf) {
  LinearRecurrence rec;
  rec.order = std::max(gf.denominator.degree(), 0);
  for (int i = 1; i <= rec.order; ++i) rec.coefficients.push_back(-gf.denominator[i]);
  const int terms = std::max(rec.order, gf.numerator.degree() + 1);
  if (terms > 0) rec.initial = expand(gf, terms - 1);
  return rec;
}

CountSequence expand(const RationalGF& gf, int upto) {
  if (gf.denominator[0] != 1) throw std::invalid_argument("expand needs denominator constant term 1");
  CountSequence a;
  a.reserve(static_cast<std::size_t>(std::max(upto, 0)) + 1);
  const int d = gf.denominator.degree();
  for (int n = 0; n <= upto; ++n) {
    mpz_class value = gf.numerator[n];
    for (int i = 1; i <= std::min(d, n); ++i) value -= gf.denominator[i] * a[static_cast<std::size_t>(n - i)];
    a.push_back(std::move(value));
  }
  return a;
}

}  // namespace permclass
