#include "surdcf/polynomial.hpp"

#include "surdcf/errors.hpp"

namespace surdcf {

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& num,
                                               const RatPolynomial& den) {
  if (den.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = num.coefficients();
  const int dd = den.degree();
  if (num.degree() < dd) return {RatPolynomial(), num};

  std::vector<Rational> quo(static_cast<std::size_t>(num.degree() - dd + 1), Rational(0));
  const Rational& lead = den.leading();
  for (int i = num.degree(); i >= dd; --i) {
    const auto ui = static_cast<std::size_t>(i);
    if (rem[ui] == 0) continue;
    const Rational f = rem[ui] / lead;
    quo[ui - static_cast<std::size_t>(dd)] = f;
    for (int j = 0; j <= dd; ++j) {
      rem[ui - static_cast<std::size_t>(dd - j)] -= f * den.coefficient(static_cast<std::size_t>(j));
    }
  }
  return {RatPolynomial(std::move(quo)), RatPolynomial(std::move(rem))};
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& num, const IntPolynomial& den) {
  auto [quo, rem] = divmod(to_rational(num), to_rational(den));
  if (!rem.is_zero()) return std::nullopt;
  std::vector<Integer> out;
  out.reserve(quo.coefficients().size());
  for (const auto& c : quo.coefficients()) {
    if (!is_integral(c)) return std::nullopt;
    out.push_back(c.get_num());
  }
  return IntPolynomial(std::move(out));
}

std::complex<double> evaluate_complex(const IntPolynomial& p, std::complex<double> z) {
  std::complex<double> acc = 0.0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + it->get_d();
  return acc;
}

}  // namespace surdcf
