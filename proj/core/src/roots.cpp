#include "surdcf/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>
#include <string>

#include "surdcf/errors.hpp"
#include "surdcf/poly_families.hpp"
#include "surdcf/sequences.hpp"

namespace surdcf {
namespace {

using cd = std::complex<double>;

// Monic double coefficients c_0 .. c_{r-1}, 1 of p (p(0) != 0).
std::vector<cd> monic_coefficients(const IntPolynomial& p) {
  const auto& c = p.coefficients();
  std::vector<cd> out;
  out.reserve(c.size());
  for (const auto& v : c) out.emplace_back(Rational(v, c.back()).get_d(), 0.0);
  return out;
}

struct HornerResult {
  cd value;
  cd deriv;
  double scale;  // sum |a_i| |z|^i, the rounding scale of value
};

// p(z) and p'(z) by Horner.
HornerResult horner(const std::vector<cd>& a, cd z) {
  cd value = 0.0, deriv = 0.0;
  double scale = 0.0;
  const double r = std::abs(z);
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    deriv = deriv * z + value;
    value = value * z + *it;
    scale = scale * r + std::abs(*it);
  }
  return {value, deriv, scale};
}

// Minimal complex arithmetic over mpf_class; std::complex is only specified
// for the built-in floating types.
struct BigComplex {
  mpf_class re;
  mpf_class im;
};

std::vector<cd> aberth_double(const std::vector<cd>& a, std::vector<cd> z, const RootOptions& opts) {
  const std::size_t r = z.size();
  const double rounding_floor = 4.0 * static_cast<double>(r) * std::numeric_limits<double>::epsilon();
  for (std::size_t iter = 0; iter < opts.max_iterations; ++iter) {
    bool settled = true;
    for (std::size_t j = 0; j < r; ++j) {
      const auto [value, deriv, scale] = horner(a, z[j]);
      // Once |p(z)| is at rounding level the Newton correction is noise.
      if (std::abs(value) <= rounding_floor * scale || deriv == 0.0) continue;
      cd repulsion = 0.0;
      for (std::size_t l = 0; l < r; ++l) {
        if (l != j) repulsion += 1.0 / (z[j] - z[l]);
      }
      const cd ratio = value / deriv;
      const cd step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) return z;
      z[j] -= step;
      if (std::abs(step) > opts.update_tolerance * std::max(1.0, std::abs(z[j]))) settled = false;
    }
    if (settled) break;
  }
  return z;
}

// Polishes z in `bits` of precision. Clustered roots of the larger families
// are too ill-conditioned for double precision alone.
std::vector<cd> aberth_polish(const IntPolynomial& p, const std::vector<cd>& start, unsigned bits,
                              const RootOptions& opts) {
  const auto& c = p.coefficients();
  const std::size_t r = start.size();
  const auto zero = [bits] { return mpf_class(0, bits); };

  std::vector<mpf_class> a;
  a.reserve(c.size());
  for (const auto& v : c) a.emplace_back(Rational(v, c.back()), bits);

  std::vector<BigComplex> z;
  z.reserve(r);
  for (const cd& w : start) z.push_back({mpf_class(w.real(), bits), mpf_class(w.imag(), bits)});

  mpf_class tol(1, bits);
  mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), bits - 32);
  const mpf_class tol2 = tol * tol;

  BigComplex value{zero(), zero()}, deriv{zero(), zero()}, rep{zero(), zero()}, ratio{zero(), zero()},
      step{zero(), zero()}, denom{zero(), zero()};
  mpf_class t1 = zero(), t2 = zero(), den = zero(), dr = zero(), di = zero();
  mpf_class scale = zero(), modulus = zero(), floor = zero();
  mpf_class rounding(static_cast<double>(4 * r), bits);
  mpf_div_2exp(rounding.get_mpf_t(), rounding.get_mpf_t(), bits);

  auto mul_add = [&](BigComplex& acc, const BigComplex& w, const mpf_class& add_re, const mpf_class& add_im) {
    t1 = acc.re * w.re - acc.im * w.im + add_re;
    t2 = acc.re * w.im + acc.im * w.re + add_im;
    acc.re = t1;
    acc.im = t2;
  };
  // out = x / y
  auto divide = [&](BigComplex& out, const BigComplex& x, const BigComplex& y) {
    den = y.re * y.re + y.im * y.im;
    t1 = (x.re * y.re + x.im * y.im) / den;
    t2 = (x.im * y.re - x.re * y.im) / den;
    out.re = t1;
    out.im = t2;
  };
  const mpf_class zero_value = zero();

  for (std::size_t iter = 0; iter < opts.max_iterations; ++iter) {
    bool settled = true;
    for (std::size_t j = 0; j < r; ++j) {
      value.re = 0;
      value.im = 0;
      deriv.re = 0;
      deriv.im = 0;
      scale = 0;
      modulus = sqrt(z[j].re * z[j].re + z[j].im * z[j].im);
      for (auto it = a.rbegin(); it != a.rend(); ++it) {
        mul_add(deriv, z[j], value.re, value.im);
        mul_add(value, z[j], *it, zero_value);
        scale = scale * modulus + abs(*it);
      }
      // At rounding level the correction is noise; a cluster of nearby roots
      // can keep it from ever dropping below the step tolerance.
      floor = rounding * scale;
      if (value.re * value.re + value.im * value.im <= floor * floor) continue;
      if (sgn(deriv.re) == 0 && sgn(deriv.im) == 0) {
        settled = false;
        z[j].re += tol;
        continue;
      }
      rep.re = 0;
      rep.im = 0;
      for (std::size_t l = 0; l < r; ++l) {
        if (l == j) continue;
        dr = z[j].re - z[l].re;
        di = z[j].im - z[l].im;
        den = dr * dr + di * di;
        if (sgn(den) == 0) continue;
        rep.re += dr / den;
        rep.im -= di / den;
      }
      divide(ratio, value, deriv);
      // step = ratio / (1 - ratio * rep)
      denom.re = 1 - (ratio.re * rep.re - ratio.im * rep.im);
      denom.im = -(ratio.re * rep.im + ratio.im * rep.re);
      divide(step, ratio, denom);
      z[j].re -= step.re;
      z[j].im -= step.im;
      den = z[j].re * z[j].re + z[j].im * z[j].im;
      if (den < 1) den = 1;
      if (step.re * step.re + step.im * step.im > tol2 * den) settled = false;
    }
    if (settled) {
      // Real roots come back with an imaginary part at the working precision's
      // noise level; anything below half the working bits is taken as zero.
      const double real_cut = std::ldexp(1.0, -static_cast<int>(bits / 2));
      std::vector<cd> out;
      out.reserve(r);
      for (const auto& w : z) {
        const double re = w.re.get_d(), im = w.im.get_d();
        out.emplace_back(re, std::abs(im) <= real_cut * std::max(1.0, std::abs(re)) ? 0.0 : im);
      }
      return out;
    }
  }
  std::vector<cd> best;
  for (const auto& w : z) best.emplace_back(w.re.get_d(), w.im.get_d());
  throw NumericFailure("Aberth iteration did not settle within " + std::to_string(opts.max_iterations) +
                           " iterations",
                       best);
}

std::vector<cd> aberth(const IntPolynomial& p, const RootOptions& opts) {
  const std::vector<cd> a = monic_coefficients(p);
  const std::size_t r = a.size() - 1;
  // Fujiwara's bound 2 max |a_{r-i}|^{1/i}; the Cauchy bound is far too loose
  // for the wide coefficient ranges of the larger families.
  double radius = 0.0;
  for (std::size_t i = 1; i <= r; ++i) {
    const double root = std::pow(std::abs(a[r - i]), 1.0 / static_cast<double>(i));
    radius = std::max(radius, i == r ? root / std::cbrt(2.0) : root);
  }
  radius *= 2.0;

  // A fixed angular offset keeps the start off any symmetry axis of real
  // polynomials.
  constexpr double kOffset = 0.4;
  std::vector<cd> z(r);
  for (std::size_t j = 0; j < r; ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(r) + kOffset;
    z[j] = std::polar(radius, angle);
  }
  z = aberth_double(a, std::move(z), opts);

  std::size_t coeff_bits = 0;
  for (const auto& v : p.coefficients()) coeff_bits = std::max(coeff_bits, mpz_sizeinbase(v.get_mpz_t(), 2));
  const auto bits = static_cast<unsigned>(192 + 2 * coeff_bits + 4 * r);
  return aberth_polish(p, z, bits, opts);
}

}  // namespace

double relative_residual(const IntPolynomial& p, std::complex<double> z) {
  double scale = 0.0;
  const double r = std::abs(z);
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) scale = scale * r + std::abs(it->get_d());
  if (scale == 0.0) return 0.0;
  return std::abs(evaluate_complex(p, z)) / scale;
}

std::vector<ComplexPoint> numeric_roots(const IntPolynomial& p, const RootOptions& opts) {
  if (p.degree() < 1) throw DomainError("numeric_roots needs degree >= 1");

  const auto& c = p.coefficients();
  std::size_t zeros = 0;
  while (c[zeros] == 0) ++zeros;
  const IntPolynomial rest(std::vector<Integer>(c.begin() + static_cast<std::ptrdiff_t>(zeros), c.end()));

  std::vector<ComplexPoint> roots(zeros, ComplexPoint{0.0, 0.0});
  if (rest.degree() == 1) {
    roots.push_back({Rational(-rest.coefficient(0), rest.coefficient(1)).get_d(), 0.0});
  } else if (rest.degree() > 1) {
    const std::vector<cd> z = aberth(rest, opts);
    for (const cd& root : z) {
      if (relative_residual(rest, root) >= opts.residual_tolerance) {
        throw NumericFailure("root residual above tolerance", z);
      }
      roots.push_back({root.real(), root.imag()});
    }
  }
  std::sort(roots.begin(), roots.end(), [](const ComplexPoint& a, const ComplexPoint& b) {
    return a.re != b.re ? a.re < b.re : a.im < b.im;
  });
  return roots;
}

std::vector<ComplexPoint> hyperbola_roots(int n, const Integer& N) {
  if (n < 1) throw DomainError("hyperbola_roots needs n >= 1");
  if (N < 2) throw DomainError("hyperbola_roots needs N >= 2");
  const double nd = N.get_d();
  const double n2m1 = nd * nd - 1.0;
  const double amplitude = std::sqrt(1.0 - 1.0 / (nd * nd));

  std::vector<ComplexPoint> out;
  out.reserve(2 * static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const double theta = j * std::numbers::pi / (n + 1);
    const double c = std::cos(theta);
    // 2 phi = asinh(2N cos(theta) / (N^2 - 1)), written with the log form of asinh.
    const double phi =
        0.5 * std::log(std::abs(2.0 * nd * c + std::sqrt(4.0 * nd * nd * c * c + n2m1 * n2m1))) -
        0.5 * std::log(std::abs(n2m1));
    const double re = amplitude * std::sinh(phi);
    const double im = amplitude * std::cosh(phi);
    out.push_back({re, im});
    out.push_back({-re, -im});
  }
  return out;
}

std::string_view curve_name(Curve c) {
  switch (c) {
    case Curve::H1: return "h1";
    case Curve::QuarticK4N3: return "quartic-k4";
    case Curve::ChebyshevIntervalK1: return "chebk1";
  }
  return "?";
}

Curve parse_curve(std::string_view name) {
  if (name == "h1") return Curve::H1;
  if (name == "quartic-k4") return Curve::QuarticK4N3;
  if (name == "chebk1") return Curve::ChebyshevIntervalK1;
  throw UsageError("unknown curve '" + std::string(name) + "'");
}

double curve_residual(const ComplexPoint& p, Curve curve, const CurveParams& params) {
  const double x = p.re;
  const double y = p.im;
  switch (curve) {
    case Curve::H1: {
      const double nd = params.N.get_d();
      return std::abs(y * y - x * x - (nd * nd - 1.0) / (nd * nd));
    }
    case Curve::QuarticK4N3: {
      const double x2 = x * x, y2 = y * y;
      return std::abs(3 * x2 * x2 - 18 * x2 * y2 + 3 * y2 * y2 + 2 * x2 * x - 6 * x * y2 +
                      9 * x2 - 9 * y2 + 4 * x + 3);
    }
    case Curve::ChebyshevIntervalK1: {
      const double lo = -4.0 / params.N.get_d();
      return std::abs(y) + std::max(0.0, x) + std::max(0.0, lo - x);
    }
  }
  return std::numeric_limits<double>::infinity();
}

double locus_residual(const std::vector<ComplexPoint>& points, Curve curve,
                      const CurveParams& params) {
  if (curve == Curve::ChebyshevIntervalK1 && params.even_index) {
    const double lo = -4.0 / params.N.get_d();
    int inside = 0, outside = 0;
    for (const auto& p : points) {
      if (std::abs(p.im) >= params.real_tolerance) continue;
      if (p.re > lo && p.re <= 0.0) {
        ++inside;
      } else {
        ++outside;
      }
    }
    return std::abs(inside - (params.n - 1)) + std::abs(outside - 1);
  }
  double worst = 0.0;
  for (const auto& p : points) worst = std::max(worst, curve_residual(p, curve, params));
  return worst;
}

double multiset_distance(const std::vector<ComplexPoint>& a, const std::vector<ComplexPoint>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<bool> used(b.size(), false);
  double worst = 0.0;
  for (const auto& p : a) {
    std::size_t best = b.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (used[i]) continue;
      const double dist = std::abs(p.z() - b[i].z());
      if (dist < best_dist) {
        best_dist = dist;
        best = i;
      }
    }
    used[best] = true;
    worst = std::max(worst, best_dist);
  }
  return worst;
}

LocusReport locus_h1(int n, const Integer& N) {
  LocusReport report{Curve::H1, 2, N, n, hyperbola_roots(n, N), {}, 0.0};
  const CurveParams params{N};
  for (const auto& p : report.roots) {
    report.residuals.push_back(curve_residual(p, Curve::H1, params));
    report.max_residual = std::max(report.max_residual, report.residuals.back());
  }
  return report;
}

LocusReport locus_quartic_k4(int m) {
  if (m < 1) throw DomainError("quartic locus needs m >= 1");
  const Integer N = 3;
  const IntPolynomial family = residue_minus1_family(4, N, m + 1).back();
  const auto reduced = divide_exact(family, fib_poly(5));
  if (!reduced) throw DomainError("Q_m(3, x) is not divisible by F_5(x)");

  LocusReport report{Curve::QuarticK4N3, 4, N, m, numeric_roots(*reduced), {}, 0.0};
  const CurveParams params{N};
  for (const auto& p : report.roots) {
    report.residuals.push_back(curve_residual(p, Curve::QuarticK4N3, params));
    report.max_residual = std::max(report.max_residual, report.residuals.back());
  }
  return report;
}

LocusReport locus_chebyshev_k1(int n, const Integer& N, bool even_index) {
  if (n < 1) throw DomainError("chebyshev locus needs n >= 1");
  if (N < 1) throw DomainError("chebyshev locus needs N >= 1");
  const DenominatorTable table(1, N, 2 * n + 1);
  const IntPolynomial& q = table.at(even_index ? 2 * n : 2 * n + 1);

  LocusReport report{Curve::ChebyshevIntervalK1, 1, N, n, numeric_roots(q), {}, 0.0};
  const CurveParams params{N, n, even_index};
  if (!even_index) {
    for (const auto& p : report.roots) {
      report.residuals.push_back(curve_residual(p, Curve::ChebyshevIntervalK1, params));
    }
  }
  report.max_residual = locus_residual(report.roots, Curve::ChebyshevIntervalK1, params);
  return report;
}

}  // namespace surdcf
