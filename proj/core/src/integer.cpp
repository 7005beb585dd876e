#include "surdcf/integer.hpp"

#include "surdcf/errors.hpp"

namespace surdcf {

Integer isqrt(const Integer& n) {
  if (n < 0) throw DomainError("isqrt: negative argument");
  if (n < 2) return n;

  // 2^ceil(bits/2) >= sqrt(n), so the iteration decreases monotonically
  // from above until it reaches the floor.
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Integer x;
  mpz_setbit(x.get_mpz_t(), (bits + 1) / 2);
  for (;;) {
    Integer y = (x + n / x) / 2;
    if (y >= x) return x;
    x = std::move(y);
  }
}

bool is_perfect_square(const Integer& n) {
  const Integer r = isqrt(n);
  return r * r == n;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw DomainError("floor_div by zero");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool divides(const Integer& d, const Integer& n) {
  if (d == 0) return n == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

bool is_integral(const Rational& r) { return r.get_den() == 1; }

std::size_t IntegerHash::operator()(const Integer& v) const noexcept {
  const mpz_srcptr z = v.get_mpz_t();
  const std::size_t limbs = mpz_size(z);
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) * 0x9e3779b97f4a7c15ULL;
  for (std::size_t i = 0; i < limbs; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(z, i)) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace surdcf
