#pragma once

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

#include "surdcf/integer.hpp"
#include "surdcf/polynomial.hpp"

namespace surdcf {

struct ComplexPoint {
  double re = 0.0;
  double im = 0.0;

  std::complex<double> z() const { return {re, im}; }
  friend bool operator==(const ComplexPoint&, const ComplexPoint&) = default;
};

struct RootOptions {
  std::size_t max_iterations = 500;
  double update_tolerance = 1e-12;
  double residual_tolerance = 1e-10;
};

/// All complex roots of p with multiplicity. Exact zero roots are split off
/// first; the rest come from Aberth-Ehrlich simultaneous iteration started
/// at equally spaced points on a circle of Fujiwara-bound radius, then
/// polished in extended precision.
/// Throws DomainError for degree < 1 and NumericFailure when the iteration
/// does not settle or a root's relative residual exceeds the tolerance.
std::vector<ComplexPoint> numeric_roots(const IntPolynomial& p, const RootOptions& opts = {});

/// |p(z)| / sum |c_i| |z|^i.
double relative_residual(const IntPolynomial& p, std::complex<double> z);

/// Closed-form zeros of shifted_Q(n, N): +-sqrt(1 - 1/N^2)(sinh phi_j + i cosh phi_j)
/// with sinh(2 phi_j) = 2N cos(j pi / (n+1)) / (N^2 - 1), j = 1..n.
std::vector<ComplexPoint> hyperbola_roots(int n, const Integer& N);

enum class Curve { H1, QuarticK4N3, ChebyshevIntervalK1 };

std::string_view curve_name(Curve c);
/// "h1", "quartic-k4", "chebk1". Throws UsageError.
Curve parse_curve(std::string_view name);

struct CurveParams {
  Integer N = 0;
  int n = 0;                    // ChebyshevIntervalK1: q_{2n} or q_{2n+1}
  bool even_index = false;      // ChebyshevIntervalK1: points are roots of q_{2n}
  double real_tolerance = 1e-8; // |im| below this counts as a real root
};

/// Pointwise curve residual (H1, QuarticK4N3).
double curve_residual(const ComplexPoint& p, Curve curve, const CurveParams& params);

/// H1: max |y^2 - x^2 - (N^2-1)/N^2|. QuarticK4N3: max |quartic(x, y)|.
/// ChebyshevIntervalK1, odd index: max distance of a root from the real
/// interval (-4/N, 0]. Even index: |#real inside - (n-1)| + |#real outside - 1|.
double locus_residual(const std::vector<ComplexPoint>& points, Curve curve,
                      const CurveParams& params);

/// Greedy nearest matching; the largest matched distance, or +inf when the
/// sizes differ.
double multiset_distance(const std::vector<ComplexPoint>& a, const std::vector<ComplexPoint>& b);

struct LocusReport {
  Curve curve = Curve::H1;
  int k = 0;
  Integer N = 0;
  int n = 0;
  std::vector<ComplexPoint> roots;
  std::vector<double> residuals;  // per root; empty for ChebyshevIntervalK1
  double max_residual = 0.0;
};

/// Closed-form zeros of shifted_Q(n, N) against H1.
LocusReport locus_h1(int n, const Integer& N);

/// Numeric zeros of Q_m(3, x) / F_5(x) from the k = 4 family against the quartic.
LocusReport locus_quartic_k4(int m);

/// Numeric zeros of the k = 1 denominators q_{2n+1} (even_index = false) or
/// q_{2n} against the interval claim.
LocusReport locus_chebyshev_k1(int n, const Integer& N, bool even_index);

}  // namespace surdcf
