#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "surdcf/integer.hpp"

namespace surdcf {

// Dense univariate polynomial, constant term first. The coefficient vector
// never ends in a zero, so the zero polynomial is the empty vector and
// equality is structural.
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  Polynomial(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(Coeff v) { return Polynomial({std::move(v)}); }
  static Polynomial x() { return Polynomial({Coeff(0), Coeff(1)}); }
  static Polynomial monomial(Coeff v, std::size_t degree) {
    std::vector<Coeff> c(degree + 1, Coeff(0));
    c[degree] = std::move(v);
    return Polynomial(std::move(c));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Coeff>& coefficients() const { return c_; }
  Coeff coefficient(std::size_t i) const {
    return i < c_.size() ? c_[i] : Coeff(0);
  }
  Coeff leading() const { return c_.empty() ? Coeff(0) : c_.back(); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Coeff& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator-(Polynomial a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }
  friend Polynomial operator*(const Coeff& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(out));
  }

  /// Horner evaluation in any ring the coefficients convert into.
  template <class Value>
  Value evaluate(const Value& at) const {
    Value acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + Value(*it);
    return acc;
  }

  /// this(inner(x)).
  Polynomial compose(const Polynomial& inner) const {
    Polynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * inner + Polynomial::constant(*it);
    }
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

inline RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) c.emplace_back(v);
  return RatPolynomial(std::move(c));
}

/// Quotient and remainder over the rationals. Throws DomainError on a zero
/// divisor.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& num,
                                               const RatPolynomial& den);

/// num / den when den divides num exactly with an integer quotient.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& num,
                                          const IntPolynomial& den);

/// Evaluate an integer polynomial at a complex double point.
std::complex<double> evaluate_complex(const IntPolynomial& p, std::complex<double> z);

}  // namespace surdcf
