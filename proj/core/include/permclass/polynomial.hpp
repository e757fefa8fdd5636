#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace permclass {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients; index = degree. The highest stored coefficient is nonzero,
/// so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<mpz_class> coefficients);
  Polynomial(std::initializer_list<long> coefficients);

  static Polynomial constant(const mpz_class& c);
  /// c * x^degree
  static Polynomial monomial(const mpz_class& c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^i; zero beyond the degree.
  mpz_class operator[](int i) const;
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  const mpz_class& leading() const { return coeffs_.back(); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const mpz_class& c);

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Gcd of the coefficients, sign of the leading coefficient; 0 for zero.
  mpz_class content() const;
  Polynomial primitive_part() const;

  /// "1 -1 -1": coefficients from the constant term up; "0" for zero.
  std::string to_string() const;

 private:
  void normalize();
  std::vector<mpz_class> coeffs_;
};

/// Exact quotient a / b in Z[x]. Throws std::domain_error if b does not
/// divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b);

/// Primitive gcd over Z[x] with positive leading coefficient (gcd over Q up
/// to a unit). gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace permclass
