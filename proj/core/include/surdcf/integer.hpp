#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>

namespace surdcf {

// Unbounded signed integer. GMP keeps zero canonical and never overflows.
using Integer = mpz_class;

// Exact rational; every value produced through this header is canonical
// (reduced, positive denominator).
using Rational = mpq_class;

/// Floor of the square root: the unique r with r*r <= n < (r+1)*(r+1).
/// Newton iteration on integers seeded from the bit length of n.
/// Throws DomainError when n < 0.
Integer isqrt(const Integer& n);

/// True iff n is a perfect square. Throws DomainError when n < 0.
bool is_perfect_square(const Integer& n);

/// num/den reduced to lowest terms. Throws DomainError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

inline int sign(const Integer& v) { return sgn(v); }

// Floor division and the matching nonnegative-remainder test.
Integer floor_div(const Integer& a, const Integer& b);
bool divides(const Integer& d, const Integer& n);

bool is_integral(const Rational& r);

struct IntegerHash {
  std::size_t operator()(const Integer& v) const noexcept;
};

}  // namespace surdcf
