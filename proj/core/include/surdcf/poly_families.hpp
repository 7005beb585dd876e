#pragma once

#include <utility>
#include <vector>

#include "surdcf/integer.hpp"
#include "surdcf/polynomial.hpp"

namespace surdcf {

// Denominators q_j(N, x) of the convergents of [(N, x^(k))], i.e. quotients
// a_j = N when (k+1) | j and a_j = x otherwise, with q_{-1} = 0, q_0 = 1 and
// q_j = a_j q_{j-1} + q_{j-2}. The table also runs the recurrence backwards
// down to index -(k+1) so every residue class has a predecessor term.
class DenominatorTable {
 public:
  DenominatorTable(int k, const Integer& N, int last);

  int k() const { return k_; }
  int first_index() const { return -(k_ + 1); }
  int last_index() const { return last_; }
  const IntPolynomial& at(int j) const;

 private:
  int k_;
  int last_;
  std::vector<IntPolynomial> q_;  // q_[j + k + 1]
};

/// q_1 .. q_count.
std::vector<IntPolynomial> convergent_denominators(int k, const Integer& N, int count);

/// g_k(N, x), the coefficient of t^k in (N + 2t) / (1 - x t - t^2);
/// equals N F_{k+1}(x) + 2 F_k(x).
IntPolynomial g_poly(int k, const Integer& N);

/// s_j = q_{j(k+1)+residue} satisfies s_{j+1} = g_k s_j + (-1)^k s_{j-1} for
/// j = 0 .. count-1 (s_{-1} comes from the backward extension).
bool subsequence_recurrence_check(int k, const Integer& N, int residue, int count);

/// Numerator of the generating function sum_j s_j t^j over the denominator
/// 1 - g_k t - (-1)^k t^2: {s_0, (-1)^k s_{-1}} as the t^0 and t^1 terms.
std::pair<IntPolynomial, IntPolynomial> residue_generating_numerator(int k, const Integer& N,
                                                                     int residue);

/// Q_m = q_{m(k+1)+k} for m = 0 .. count-1 (the n = -1 mod (k+1) class).
std::vector<IntPolynomial> residue_minus1_family(int k, const Integer& N, int count);

/// F_{k+1}(x) F_{m+1}(g_k) for even k, F_{k+1}(x) V_m(g_k) for odd k, where
/// V_m(2y) = U_m(y).
IntPolynomial residue_minus1_closed_form(int k, const Integer& N, int m);

/// Q_0 = 1, Q_1 = c, Q_{n+1} = c Q_n + N^2 Q_{n-1} with c = N^2 x^2 + N^2 - 1.
IntPolynomial shifted_Q(int n, const Integer& N);

/// N^n F_{n+1}(N x^2 + N - 1/N) over the rationals.
RatPolynomial shifted_Q_closed_form(int n, const Integer& N);

/// N^n Q_n^{(k=2)}(N, x - 1/N) / F_3(x - 1/N): the k = 2 family with its
/// x^2 + 1 factor removed and shifted.
RatPolynomial shifted_Q_from_family(int n, const Integer& N);

/// For k = 1: q_{2n} = V_n(Nx + 2) - V_{n-1}(Nx + 2) and
/// q_{2n+1} = x V_n(Nx + 2), i.e. U_n evaluated at Nx/2 + 1.
bool chebyshev_relation_check(int n, const Integer& N);

}  // namespace surdcf
