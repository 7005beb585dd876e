#pragma once

#include <span>
#include <vector>

#include "surdcf/integer.hpp"
#include "surdcf/surd.hpp"

namespace surdcf {

// 2x2 integer matrix (a b; c d).
struct Mat2 {
  Integer a = 1, b = 0, c = 0, d = 1;

  static Mat2 identity() { return {}; }
  /// (q 1; 1 0), the matrix of a single partial quotient.
  static Mat2 quotient(const Integer& q) { return {q, 1, 1, 0}; }

  Integer det() const { return a * d - b * c; }
  Integer trace() const { return a + d; }
  Mat2 transpose() const { return {a, c, b, d}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

// Finite list of partial quotients c_0, c_1, ..., c_k.
using CFWord = std::vector<Integer>;

// Last two convergents of a word: p/q is its value, p_prev/q_prev the value
// with the final quotient dropped.
struct Continuant {
  Integer p, q, p_prev, q_prev;

  Mat2 matrix() const { return {p, p_prev, q, q_prev}; }
  friend bool operator==(const Continuant&, const Continuant&) = default;
};

/// Product of the quotient matrices of word (identity for an empty word).
Mat2 word_matrix(std::span<const Integer> word);

/// Continuant of a nonempty word. Throws UsageError on an empty word.
Continuant continuant(std::span<const Integer> word);

/// (a s + b) / (c s + d) for an integer matrix with nonzero determinant.
QuadraticSurd apply_mobius(const Mat2& m, const QuadraticSurd& s);

/// Exact value of [preperiod; (period)]. The period is solved as the larger
/// root of q x^2 + (q_prev - p) x - p_prev and the preperiod applied as a
/// Mobius transform. Zero quotients are collapsed first. Throws
/// NotQuadraticIrrational when the fixed point is rational.
QuadraticSurd periodic_value(const PeriodicCF& cf);

/// Rewrites [..., a, 0, b, ...] into [..., a + b, ...] until no interior
/// entry is zero. The word matrix is unchanged.
CFWord canonicalize(std::span<const Integer> word);

/// F~_{n+1}(m) / F~_n(m) = [1^(n-1), m] for n >= 2, and additionally
/// F~_{n+2}(m) / F~_n(m) = [2, 1^(n-2), m] for n >= 3.
/// Throws UsageError for n < 2.
bool ratio_lemma_check(int n, const Integer& m);

/// The reversed word evaluates to p_k / p_{k-1} and the reversed word without
/// c_0 evaluates to q_k / q_{k-1}. Throws UsageError for words shorter than 2.
bool reversal_check(std::span<const Integer> word);

/// p q_prev - p_prev q == (-1)^(k+1) for the word c_0..c_k.
bool determinant_identity(std::span<const Integer> word);

}  // namespace surdcf
