#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "surdcf/integer.hpp"

namespace surdcf {

inline constexpr std::size_t kDefaultMaxSteps = 10'000;

// The quadratic irrational (P + sqrt(D)) / Q.
//
// Invariants: Q != 0, D > 0 and not a perfect square, Q divides D - P^2.
// The stored triple is the minimal representative of its value: no h > 1
// with h | P, h | Q, h^2 | D and hQ | D - P^2 remains. Two surds are equal
// iff their triples are equal.
class QuadraticSurd {
 public:
  /// Scales (P, Q, D) by |Q| when Q does not divide D - P^2, then reduces.
  /// Throws NotQuadraticIrrational for square or nonpositive D and
  /// DomainError for Q == 0.
  QuadraticSurd(Integer p, Integer q, Integer d);

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  const Integer& d() const { return d_; }

  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;

  double approx() const;

 private:
  Integer p_, q_, d_;
};

// (P - sqrt(D)) / Q. Kept as its own type: it is what a surd's conjugate
// looks like, and only sign/ordering questions are asked of it.
struct ConjugateSurd {
  Integer p, q, d;

  friend bool operator==(const ConjugateSurd&, const ConjugateSurd&) = default;
  double approx() const;
};

// Eventually periodic simple continued fraction
// [preperiod...; (period...)]. Canonical form: the period is primitive and
// the preperiod cannot be shortened (its last entry differs from the last
// period entry).
struct PeriodicCF {
  std::vector<Integer> preperiod;
  std::vector<Integer> period;

  friend bool operator==(const PeriodicCF&, const PeriodicCF&) = default;
};

/// Canonical form of any (preperiod, period) split of the same value.
/// Throws UsageError on an empty period.
PeriodicCF canonical(PeriodicCF cf);

/// Larger root of a x^2 + b x + c.
QuadraticSurd surd_from_quadratic(const Integer& a, const Integer& b,
                                  const Integer& c);

/// floor((P + sqrt(D)) / Q), exact for either sign of Q.
Integer floor_surd(const QuadraticSurd& s);

ConjugateSurd conjugate(const QuadraticSurd& s);
QuadraticSurd conjugate(const ConjugateSurd& s);

/// Sign of s - t for integer t, decided without floating point.
int compare(const QuadraticSurd& s, const Integer& t);
int compare(const ConjugateSurd& s, const Integer& t);

/// s > 1 and -1 < conjugate(s) < 0.
bool is_reduced(const QuadraticSurd& s);

/// n * s. Throws DomainError for n <= 0.
QuadraticSurd scale(const QuadraticSurd& s, const Integer& n);

/// Periodic continued fraction of s. Throws BudgetExceeded when no state
/// repeats within max_steps partial quotients.
PeriodicCF expand(const QuadraticSurd& s, std::size_t max_steps = kDefaultMaxSteps);

/// Primitive integer polynomial {a, b, c} (a > 0) with a s^2 + b s + c = 0.
std::array<Integer, 3> minimal_polynomial(const QuadraticSurd& s);

/// Root of a monic integer quadratic.
bool is_algebraic_integer(const QuadraticSurd& s);

}  // namespace surdcf
