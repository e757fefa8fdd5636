#include "permclass/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace permclass {

Polynomial::Polynomial(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

Polynomial Polynomial::constant(const mpz_class& c) { return Polynomial(std::vector<mpz_class>{c}); }

Polynomial Polynomial::monomial(const mpz_class& c, int degree) {
  std::vector<mpz_class> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class Polynomial::operator[](int i) const {
  return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : mpz_class(0);
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(Polynomial a, const mpz_class& c) {
  for (auto& x : a.coeffs_) x *= c;
  a.normalize();
  return a;
}

mpz_class Polynomial::content() const {
  if (is_zero()) return 0;
  mpz_class g = 0;
  for (const auto& c : coeffs_) g = ::gcd(g, c);
  return leading() < 0 ? mpz_class(-g) : g;
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return {};
  const mpz_class c = content();
  Polynomial out = *this;
  for (auto& x : out.coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return out;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out << ' ';
    out << coeffs_[i];
  }
  return out.str();
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<mpz_class> rem = a.coefficients();
  std::vector<mpz_class> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const auto& bc = b.coefficients();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    mpz_class& top = rem[static_cast<std::size_t>(i + b.degree())];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t())) {
      throw std::domain_error("inexact polynomial division");
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
    for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(i) + j] -= q * bc[j];
    quot[static_cast<std::size_t>(i)] = std::move(q);
  }
  for (const auto& r : rem) {
    if (r != 0) throw std::domain_error("inexact polynomial division");
  }
  return Polynomial(std::move(quot));
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by the zero polynomial");
  Polynomial r = a;
  const int db = b.degree();
  int steps = a.degree() - db + 1;
  if (steps <= 0) return r;
  while (!r.is_zero() && r.degree() >= db) {
    const Polynomial shift = Polynomial::monomial(r.leading(), r.degree() - db);
    r = r * b.leading() - shift * b;
    --steps;
  }
  // Account for skipped steps so the multiplier is exactly lc(b)^(deg a - deg b + 1).
  for (; steps > 0; --steps) r = r * b.leading();
  return r;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.primitive_part();
  Polynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Polynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

}  // namespace permclass
