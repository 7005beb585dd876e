#include "surdcf/convergents.hpp"

#include <string>

#include "surdcf/errors.hpp"
#include "surdcf/sequences.hpp"

namespace surdcf {
namespace {

bool same_ratio(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
  return a * d == b * c;
}

CFWord ones_then(std::size_t ones, const Integer& last) {
  CFWord w(ones, Integer(1));
  w.push_back(last);
  return w;
}

}  // namespace

Mat2 word_matrix(std::span<const Integer> word) {
  Mat2 m;
  for (const auto& c : word) m = m * Mat2::quotient(c);
  return m;
}

Continuant continuant(std::span<const Integer> word) {
  if (word.empty()) throw UsageError("continuant of an empty word");
  const Mat2 m = word_matrix(word);
  return {m.a, m.c, m.b, m.d};
}

QuadraticSurd apply_mobius(const Mat2& m, const QuadraticSurd& s) {
  if (m.det() == 0) throw DomainError("singular Mobius transform");
  // s = (u + sqrt(d)) / v. Then
  //   (a s + b) / (c s + e) = (x1 + a sqrt(d)) / (y1 + c sqrt(d))
  // with x1 = a u + b v, y1 = c u + e v. Rationalizing the denominator leaves
  // sqrt(d) with coefficient v * det.
  const Integer& u = s.p();
  const Integer& v = s.q();
  const Integer& d = s.d();
  const Integer x1 = m.a * u + m.b * v;
  const Integer y1 = m.c * u + m.d * v;
  Integer num = x1 * y1 - m.a * m.c * d;
  Integer den = y1 * y1 - m.c * m.c * d;
  Integer root_coeff = v * m.det();
  if (root_coeff < 0) {
    num = -num;
    den = -den;
    root_coeff = -root_coeff;
  }
  return QuadraticSurd(num, den, root_coeff * root_coeff * d);
}

QuadraticSurd periodic_value(const PeriodicCF& cf) {
  if (cf.period.empty()) throw UsageError("periodic_value needs a nonempty period");
  const CFWord period = canonicalize(cf.period);
  for (const auto& c : period) {
    if (c < 1) throw NotQuadraticIrrational("period entries must be positive after collapsing zeros");
  }

  const Continuant k = continuant(period);
  // x = (p x + p_prev) / (q x + q_prev)  =>  q x^2 + (q_prev - p) x - p_prev = 0.
  const Integer disc = (k.q_prev - k.p) * (k.q_prev - k.p) + 4 * k.q * k.p_prev;
  if (k.q == 0 || disc <= 0 || is_perfect_square(disc)) {
    throw NotQuadraticIrrational("period word has a rational fixed point");
  }
  QuadraticSurd value(k.p - k.q_prev, 2 * k.q, disc);
  if (!cf.preperiod.empty()) value = apply_mobius(word_matrix(cf.preperiod), value);
  return value;
}

CFWord canonicalize(std::span<const Integer> word) {
  CFWord out;
  out.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    const bool interior_zero = i > 0 && i + 1 < word.size() && word[i] == 0 && !out.empty();
    if (interior_zero) {
      out.back() += word[i + 1];
      ++i;
    } else {
      out.push_back(word[i]);
    }
  }
  return out;
}

bool ratio_lemma_check(int n, const Integer& m) {
  if (n < 2) throw UsageError("ratio lemma needs n >= 2, got " + std::to_string(n));

  const CFWord first = ones_then(static_cast<std::size_t>(n - 1), m);
  const Continuant c1 = continuant(first);
  bool ok = same_ratio(c1.p, c1.q, fib_like(n + 1, m), fib_like(n, m));

  if (n >= 3) {
    CFWord second = ones_then(static_cast<std::size_t>(n - 2), m);
    second.insert(second.begin(), Integer(2));
    const Continuant c2 = continuant(second);
    ok = ok && same_ratio(c2.p, c2.q, fib_like(n + 2, m), fib_like(n, m));
  }
  return ok;
}

bool reversal_check(std::span<const Integer> word) {
  if (word.size() < 2) throw UsageError("reversal check needs at least two quotients");
  const Continuant fwd = continuant(word);

  const CFWord reversed(word.rbegin(), word.rend());
  const Continuant full = continuant(reversed);
  const Continuant tail = continuant(std::span<const Integer>(reversed).first(reversed.size() - 1));

  // Transposing the matrix product gives the reversed word's matrix.
  return word_matrix(reversed) == fwd.matrix().transpose() &&
         same_ratio(full.p, full.q, fwd.p, fwd.p_prev) &&
         same_ratio(tail.p, tail.q, fwd.q, fwd.q_prev);
}

bool determinant_identity(std::span<const Integer> word) {
  const Continuant c = continuant(word);
  const int expected = word.size() % 2 == 0 ? 1 : -1;  // (-1)^(k+1), k = size - 1
  return c.p * c.q_prev - c.p_prev * c.q == expected;
}

}  // namespace surdcf
