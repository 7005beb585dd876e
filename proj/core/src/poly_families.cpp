#include "surdcf/poly_families.hpp"

#include <string>

#include "surdcf/errors.hpp"
#include "surdcf/sequences.hpp"

namespace surdcf {
namespace {

Integer power(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace

DenominatorTable::DenominatorTable(int k, const Integer& N, int last) : k_(k), last_(last) {
  if (k < 1) throw DomainError("pattern length k must be >= 1, got " + std::to_string(k));
  if (last < 0) throw DomainError("denominator table needs last index >= 0");

  const int period = k + 1;
  const IntPolynomial x = IntPolynomial::x();
  const IntPolynomial n_const = IntPolynomial::constant(N);
  auto quotient = [&](int j) -> const IntPolynomial& {
    return ((j % period) + period) % period == 0 ? n_const : x;
  };

  q_.resize(static_cast<std::size_t>(last + period + 1));
  auto slot = [&](int j) -> IntPolynomial& { return q_[static_cast<std::size_t>(j + period)]; };
  slot(-1) = IntPolynomial();
  slot(0) = IntPolynomial::constant(1);
  for (int j = 1; j <= last; ++j) slot(j) = quotient(j) * slot(j - 1) + slot(j - 2);
  // q_{j-2} = q_j - a_j q_{j-1}
  for (int j = 0; j - 2 >= -period; --j) slot(j - 2) = slot(j) - quotient(j) * slot(j - 1);
}

const IntPolynomial& DenominatorTable::at(int j) const {
  if (j < first_index() || j > last_) {
    throw DomainError("denominator index " + std::to_string(j) + " outside table");
  }
  return q_[static_cast<std::size_t>(j + k_ + 1)];
}

std::vector<IntPolynomial> convergent_denominators(int k, const Integer& N, int count) {
  if (count < 1) throw DomainError("count must be >= 1");
  const DenominatorTable table(k, N, count);
  std::vector<IntPolynomial> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int j = 1; j <= count; ++j) out.push_back(table.at(j));
  return out;
}

IntPolynomial g_poly(int k, const Integer& N) {
  if (k < 0) throw DomainError("g_poly index must be >= 0");
  // (N + 2t) / (1 - x t - t^2): g_0 = N, g_1 = N x + 2, then the Fibonacci
  // recurrence in x.
  IntPolynomial prev = IntPolynomial::constant(N);
  if (k == 0) return prev;
  IntPolynomial cur({Integer(2), N});
  const IntPolynomial x = IntPolynomial::x();
  for (int i = 1; i < k; ++i) {
    IntPolynomial next = x * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool subsequence_recurrence_check(int k, const Integer& N, int residue, int count) {
  if (residue < 0 || residue > k) throw DomainError("residue must lie in [0, k]");
  if (count < 1) throw DomainError("count must be >= 1");
  const int period = k + 1;
  const DenominatorTable table(k, N, count * period + residue);
  const IntPolynomial g = g_poly(k, N);
  const Integer sign = k % 2 == 0 ? 1 : -1;

  auto s = [&](int j) -> const IntPolynomial& { return table.at(j * period + residue); };
  for (int j = 0; j < count; ++j) {
    if (s(j + 1) != g * s(j) + s(j - 1) * sign) return false;
  }
  return true;
}

std::pair<IntPolynomial, IntPolynomial> residue_generating_numerator(int k, const Integer& N,
                                                                     int residue) {
  if (residue < 0 || residue > k) throw DomainError("residue must lie in [0, k]");
  const DenominatorTable table(k, N, residue);
  const Integer sign = k % 2 == 0 ? 1 : -1;
  return {table.at(residue), table.at(residue - (k + 1)) * sign};
}

std::vector<IntPolynomial> residue_minus1_family(int k, const Integer& N, int count) {
  if (count < 1) throw DomainError("count must be >= 1");
  const int period = k + 1;
  const DenominatorTable table(k, N, (count - 1) * period + k);
  std::vector<IntPolynomial> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int m = 0; m < count; ++m) out.push_back(table.at(m * period + k));
  return out;
}

IntPolynomial residue_minus1_closed_form(int k, const Integer& N, int m) {
  if (k < 1 || m < 0) throw DomainError("residue_minus1_closed_form needs k >= 1, m >= 0");
  const IntPolynomial g = g_poly(k, N);
  const IntPolynomial outer = k % 2 == 0 ? fib_poly(m + 1) : chebyshev_u_doubled(m);
  return fib_poly(k + 1) * outer.compose(g);
}

IntPolynomial shifted_Q(int n, const Integer& N) {
  if (n < 0) throw DomainError("shifted_Q index must be >= 0");
  const Integer n2 = N * N;
  const IntPolynomial c({n2 - 1, Integer(0), n2});
  IntPolynomial prev = IntPolynomial::constant(1);
  if (n == 0) return prev;
  IntPolynomial cur = c;
  for (int i = 1; i < n; ++i) {
    IntPolynomial next = c * cur + prev * n2;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RatPolynomial shifted_Q_closed_form(int n, const Integer& N) {
  if (n < 0) throw DomainError("shifted_Q index must be >= 0");
  const Rational n_rat(N);
  const RatPolynomial arg({n_rat - 1 / n_rat, Rational(0), n_rat});
  return to_rational(fib_poly(n + 1)).compose(arg) * Rational(power(N, static_cast<unsigned long>(n)));
}

RatPolynomial shifted_Q_from_family(int n, const Integer& N) {
  if (n < 0) throw DomainError("shifted_Q index must be >= 0");
  const RatPolynomial shift({-1 / Rational(N), Rational(1)});
  const RatPolynomial family = to_rational(residue_minus1_family(2, N, n + 1).back()).compose(shift);
  const RatPolynomial factor = to_rational(fib_poly(3)).compose(shift);
  auto [quo, rem] = divmod(family, factor);
  if (!rem.is_zero()) throw DomainError("k = 2 family member is not divisible by x^2 + 1");
  return quo * Rational(power(N, static_cast<unsigned long>(n)));
}

bool chebyshev_relation_check(int n, const Integer& N) {
  if (n < 1) throw DomainError("chebyshev relation needs n >= 1");
  const DenominatorTable table(1, N, 2 * n + 1);
  const IntPolynomial arg({Integer(2), N});  // N x + 2 = 2 (N x / 2 + 1)
  const IntPolynomial vn = chebyshev_u_doubled(n).compose(arg);
  const IntPolynomial vn1 = chebyshev_u_doubled(n - 1).compose(arg);
  return table.at(2 * n) == vn - vn1 && table.at(2 * n + 1) == IntPolynomial::x() * vn;
}

}  // namespace surdcf
