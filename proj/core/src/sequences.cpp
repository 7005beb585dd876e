#include "surdcf/sequences.hpp"

#include <string>

#include "surdcf/errors.hpp"

namespace surdcf {

SequenceCache::SequenceCache() : fib_{0, 1}, luc_{2, 1} {}

SequenceCache& SequenceCache::global() {
  static SequenceCache cache;
  return cache;
}

Integer SequenceCache::lookup(std::vector<Integer>& table, int n) {
  const auto idx = static_cast<std::size_t>(n);
  {
    std::shared_lock lock(mutex_);
    if (idx < table.size()) return table[idx];
  }
  std::unique_lock lock(mutex_);
  while (table.size() <= idx) {
    const std::size_t s = table.size();
    table.push_back(table[s - 1] + table[s - 2]);
  }
  return table[idx];
}

Integer SequenceCache::fibonacci(int n) {
  if (n < -1) throw DomainError("fibonacci index below -1: " + std::to_string(n));
  if (n == -1) return 1;
  return lookup(fib_, n);
}

Integer SequenceCache::lucas(int n) {
  if (n < 0) throw DomainError("lucas index below 0: " + std::to_string(n));
  return lookup(luc_, n);
}

Integer fibonacci(int n) { return SequenceCache::global().fibonacci(n); }
Integer lucas(int n) { return SequenceCache::global().lucas(n); }

Integer fib_like(int n, const Integer& m) {
  if (n < 0) throw DomainError("fib_like index below 0: " + std::to_string(n));
  if (n == 0) return 0;
  if (n == 1) return 1;
  return m * fibonacci(n - 1) + fibonacci(n - 2);
}

Integer lucas_like(int n, const Integer& m) {
  if (n < 0) throw DomainError("lucas_like index below 0: " + std::to_string(n));
  if (n == 0) return 3 - m;
  if (n == 1) return 2 * m - 1;
  return m * lucas(n - 1) + lucas(n - 2);
}

IntPolynomial fib_poly(int k) {
  if (k < -1) throw DomainError("fib_poly index below -1: " + std::to_string(k));
  if (k == -1) return IntPolynomial::constant(1);
  IntPolynomial prev;                          // F_0
  IntPolynomial cur = IntPolynomial::constant(1);  // F_1
  if (k == 0) return prev;
  const IntPolynomial x = IntPolynomial::x();
  for (int i = 1; i < k; ++i) {
    IntPolynomial next = x * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Rational fib_poly_eval(int k, const Rational& x) {
  if (k < -1) throw DomainError("fib_poly index below -1: " + std::to_string(k));
  if (k == -1) return 1;
  Rational prev = 0, cur = 1;
  if (k == 0) return prev;
  for (int i = 1; i < k; ++i) {
    Rational next = x * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {

IntPolynomial chebyshev_like(int n, const IntPolynomial& first, const IntPolynomial& multiplier) {
  if (n < 0) throw DomainError("chebyshev index below 0: " + std::to_string(n));
  IntPolynomial prev = IntPolynomial::constant(1);
  if (n == 0) return prev;
  IntPolynomial cur = first;
  for (int i = 1; i < n; ++i) {
    IntPolynomial next = multiplier * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

IntPolynomial chebyshev_u(int n) {
  const IntPolynomial two_x({0, 2});
  return chebyshev_like(n, two_x, two_x);
}

IntPolynomial chebyshev_u_doubled(int n) {
  return chebyshev_like(n, IntPolynomial::x(), IntPolynomial::x());
}

Identity parse_identity(std::string_view name) {
  if (name == "fid") return Identity::Fid;
  if (name == "luc5") return Identity::Luc5;
  if (name == "id1") return Identity::Id1;
  if (name == "id2") return Identity::Id2;
  if (name == "fib2a") return Identity::Fib2a;
  if (name == "idf2") return Identity::Idf2;
  throw UsageError("unknown identity '" + std::string(name) + "'");
}

std::string_view identity_name(Identity id) {
  switch (id) {
    case Identity::Fid: return "fid";
    case Identity::Luc5: return "luc5";
    case Identity::Id1: return "id1";
    case Identity::Id2: return "id2";
    case Identity::Fib2a: return "fib2a";
    case Identity::Idf2: return "idf2";
  }
  return "?";
}

bool identity_check(Identity id, int n, const std::optional<Rational>& x) {
  if (n < 2) throw UsageError("identity index must be >= 2, got " + std::to_string(n));
  const int parity = n % 2 == 0 ? 1 : -1;

  switch (id) {
    case Identity::Fid: {
      const Integer f1 = fibonacci(n - 1);
      return f1 * f1 - fibonacci(n) * fibonacci(n - 2) == parity;
    }
    case Identity::Luc5: {
      const Integer l1 = lucas(n - 1);
      return l1 * l1 - lucas(n) * lucas(n - 2) == -5 * parity;
    }
    case Identity::Id1:
      return lucas(n) == fibonacci(n + 1) + fibonacci(n - 1);
    case Identity::Id2:
      return lucas(n) + 2 * lucas(n - 1) == 5 * fibonacci(n);
    case Identity::Fib2a: {
      if (!x || !is_integral(*x)) throw UsageError("fib2a needs an integral m");
      const Integer m = x->get_num();
      const Integer lhs = fib_like(n + 1, m);
      return lhs == fibonacci(n + 1) + (m - 1) * fibonacci(n) &&
             lhs == m * fibonacci(n) + fibonacci(n - 1);
    }
    case Identity::Idf2: {
      const IntPolynomial f1 = fib_poly(n - 1);
      const bool exact =
          f1 * f1 - fib_poly(n) * fib_poly(n - 2) == IntPolynomial::constant(parity);
      if (!x) return exact;
      const Rational v1 = fib_poly_eval(n - 1, *x);
      return exact && v1 * v1 - fib_poly_eval(n, *x) * fib_poly_eval(n - 2, *x) == parity;
    }
  }
  return false;
}

}  // namespace surdcf
