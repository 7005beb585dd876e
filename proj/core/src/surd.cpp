#include "surdcf/surd.hpp"

#include <unordered_map>
#include <utility>

#include "surdcf/errors.hpp"

namespace surdcf {
namespace {

Integer gcd_abs(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Largest h that can be divided out of (P, Q, D) while keeping Q | D - P^2.
// Every valid triple for the value is m (-b/2, a, (b^2 - 4ac)/4) where
// a x^2 + b x + c is the primitive minimal polynomial, so the scale is the
// content G of (Q, 2P, (D - P^2)/Q), halved when b = -2P/G is odd.
Integer common_scale(const Integer& p, const Integer& q, const Integer& rest) {
  const Integer g = gcd_abs(gcd_abs(q, 2 * p), rest);
  return divides(g, p) ? g : Integer(g / 2);
}

// sign(a + sqrt(d)) and sign(a - sqrt(d)) for non-square d > 0.
int sign_plus_root(const Integer& a, const Integer& d) {
  if (a >= 0) return 1;
  return a * a < d ? 1 : -1;
}

int sign_minus_root(const Integer& a, const Integer& d) {
  if (a <= 0) return -1;
  return a * a > d ? 1 : -1;
}

double approx_value(const Integer& p, const Integer& q, const Integer& d, int root_sign) {
  mpf_class root(d, 256);
  root = sqrt(root);
  mpf_class value(p, 256);
  if (root_sign > 0) {
    value += root;
  } else {
    value -= root;
  }
  value /= mpf_class(q, 256);
  return value.get_d();
}

struct StateKey {
  Integer p, q;
  friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const noexcept {
    const IntegerHash h;
    return h(k.p) * 31 + h(k.q);
  }
};

}  // namespace

QuadraticSurd::QuadraticSurd(Integer p, Integer q, Integer d)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
  if (q_ == 0) throw DomainError("quadratic surd with zero denominator");
  if (d_ <= 0 || is_perfect_square(d_)) {
    throw NotQuadraticIrrational("radicand " + d_.get_str() +
                                 " is not a positive non-square");
  }
  if (!divides(q_, d_ - p_ * p_)) {
    const Integer m = abs(q_);
    p_ *= m;
    d_ *= q_ * q_;
    q_ *= m;
  }
  Integer rest = d_ - p_ * p_;
  mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), q_.get_mpz_t());
  const Integer h = common_scale(p_, q_, rest);
  if (h != 1) {
    p_ /= h;
    q_ /= h;
    d_ /= h * h;
  }
}

double QuadraticSurd::approx() const { return approx_value(p_, q_, d_, 1); }
double ConjugateSurd::approx() const { return approx_value(p, q, d, -1); }

PeriodicCF canonical(PeriodicCF cf) {
  if (cf.period.empty()) throw UsageError("periodic continued fraction with empty period");

  const std::size_t len = cf.period.size();
  for (std::size_t w = 1; w < len; ++w) {
    if (len % w != 0) continue;
    bool repeats = true;
    for (std::size_t i = w; i < len && repeats; ++i) repeats = cf.period[i] == cf.period[i - w];
    if (repeats) {
      cf.period.resize(w);
      break;
    }
  }

  while (!cf.preperiod.empty() && cf.preperiod.back() == cf.period.back()) {
    cf.preperiod.pop_back();
    std::rotate(cf.period.rbegin(), cf.period.rbegin() + 1, cf.period.rend());
  }
  return cf;
}

QuadraticSurd surd_from_quadratic(const Integer& a, const Integer& b, const Integer& c) {
  if (a == 0) throw NotQuadraticIrrational("leading coefficient is zero");
  const Integer disc = b * b - 4 * a * c;
  if (disc <= 0 || is_perfect_square(disc)) {
    throw NotQuadraticIrrational("discriminant " + disc.get_str() +
                                 " is not a positive non-square");
  }
  // Larger root: (-b + sqrt(disc)) / (2a) for a > 0, (b + sqrt(disc)) / (-2a)
  // for a < 0.
  return a > 0 ? QuadraticSurd(-b, 2 * a, disc) : QuadraticSurd(b, -2 * a, disc);
}

Integer floor_surd(const QuadraticSurd& s) {
  const Integer root = isqrt(s.d());
  if (s.q() > 0) return floor_div(s.p() + root, s.q());
  return floor_div(-s.p() - root - 1, -s.q());
}

ConjugateSurd conjugate(const QuadraticSurd& s) { return {s.p(), s.q(), s.d()}; }

QuadraticSurd conjugate(const ConjugateSurd& s) { return QuadraticSurd(s.p, s.q, s.d); }

int compare(const QuadraticSurd& s, const Integer& t) {
  return sign_plus_root(s.p() - t * s.q(), s.d()) * sgn(s.q());
}

int compare(const ConjugateSurd& s, const Integer& t) {
  return sign_minus_root(s.p - t * s.q, s.d) * sgn(s.q);
}

bool is_reduced(const QuadraticSurd& s) {
  const ConjugateSurd c = conjugate(s);
  return compare(s, Integer(1)) > 0 && compare(c, Integer(-1)) > 0 &&
         compare(c, Integer(0)) < 0;
}

QuadraticSurd scale(const QuadraticSurd& s, const Integer& n) {
  if (n <= 0) throw DomainError("scale factor must be positive, got " + n.get_str());
  return QuadraticSurd(n * s.p(), s.q(), n * n * s.d());
}

PeriodicCF expand(const QuadraticSurd& s, std::size_t max_steps) {
  const Integer& d = s.d();
  const Integer root = isqrt(d);
  Integer p = s.p();
  Integer q = s.q();

  std::unordered_map<StateKey, std::size_t, StateKeyHash> seen;
  std::vector<Integer> terms;
  for (;;) {
    auto [it, inserted] = seen.try_emplace(StateKey{p, q}, terms.size());
    if (!inserted) {
      const auto start = static_cast<std::ptrdiff_t>(it->second);
      PeriodicCF cf;
      cf.preperiod.assign(terms.begin(), terms.begin() + start);
      cf.period.assign(terms.begin() + start, terms.end());
      return canonical(std::move(cf));
    }
    if (terms.size() >= max_steps) {
      throw BudgetExceeded("no repeated state within " + std::to_string(max_steps) +
                               " partial quotients",
                           max_steps);
    }

    Integer a = q > 0 ? floor_div(p + root, q) : floor_div(-p - root - 1, -q);
    p = a * q - p;
    Integer next_q = d - p * p;
    mpz_divexact(next_q.get_mpz_t(), next_q.get_mpz_t(), q.get_mpz_t());
    q = std::move(next_q);
    terms.push_back(std::move(a));
  }
}

std::array<Integer, 3> minimal_polynomial(const QuadraticSurd& s) {
  // Q s - P = sqrt(D)  =>  Q^2 s^2 - 2PQ s + (P^2 - D) = 0.
  Integer a = s.q() * s.q();
  Integer b = -2 * s.p() * s.q();
  Integer c = s.p() * s.p() - s.d();
  const Integer g = gcd_abs(gcd_abs(a, b), c);
  a /= g;
  b /= g;
  c /= g;
  return {a, b, c};
}

bool is_algebraic_integer(const QuadraticSurd& s) { return minimal_polynomial(s)[0] == 1; }

}  // namespace surdcf
