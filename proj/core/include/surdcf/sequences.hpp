#pragma once

#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string_view>
#include <vector>

#include "surdcf/integer.hpp"
#include "surdcf/polynomial.hpp"

namespace surdcf {

// Memoized Fibonacci and Lucas numbers. Readers share the lock; a miss takes
// it exclusively and extends the table. Returned values are copies.
class SequenceCache {
 public:
  SequenceCache();

  Integer fibonacci(int n);
  Integer lucas(int n);

  static SequenceCache& global();

 private:
  Integer lookup(std::vector<Integer>& table, int n);

  std::shared_mutex mutex_;
  std::vector<Integer> fib_;
  std::vector<Integer> luc_;
};

/// F_n for n >= -1 (F_{-1} = 1). Throws DomainError below that.
Integer fibonacci(int n);

/// L_n for n >= 0. Throws DomainError for n < 0.
Integer lucas(int n);

/// Fibonacci-like number: 0 at n = 0, m F_{n-1} + F_{n-2} for n >= 1.
Integer fib_like(int n, const Integer& m);

/// Lucas-like number: 3 - m at n = 0, 2m - 1 at n = 1, m L_{n-1} + L_{n-2}
/// from n = 2 on.
Integer lucas_like(int n, const Integer& m);

/// Fibonacci polynomial F_k(x) for k >= -1 (F_{-1} = 1, F_0 = 0, F_1 = 1).
IntPolynomial fib_poly(int k);

/// F_k(x) at a rational point, run through the recurrence directly.
Rational fib_poly_eval(int k, const Rational& x);

/// Chebyshev polynomial of the second kind U_n(x).
IntPolynomial chebyshev_u(int n);

/// The integer polynomial V_n with V_n(2y) = U_n(y): V_0 = 1, V_1 = x,
/// V_{n+1} = x V_n - V_{n-1}.
IntPolynomial chebyshev_u_doubled(int n);

enum class Identity { Fid, Luc5, Id1, Id2, Fib2a, Idf2 };

/// "fid", "luc5", "id1", "id2", "fib2a", "idf2". Throws UsageError otherwise.
Identity parse_identity(std::string_view name);
std::string_view identity_name(Identity id);

/// Whether the named identity holds exactly at index n (n >= 2).
///   fid   F_{n-1}^2 - F_n F_{n-2} = (-1)^n
///   luc5  L_{n-1}^2 - L_n L_{n-2} = 5 (-1)^{n-1}
///   id1   L_n = F_{n+1} + F_{n-1}
///   id2   L_n + 2 L_{n-1} = 5 F_n
///   fib2a F~_{n+1}(m) = F_{n+1} + (m-1) F_n = m F_n + F_{n-1}; m = x, required
///         and integral
///   idf2  F_{n-1}(x)^2 - F_n(x) F_{n-2}(x) = (-1)^n as polynomials; when x is
///         given the identity is also checked at that point
bool identity_check(Identity id, int n, const std::optional<Rational>& x = std::nullopt);

}  // namespace surdcf
