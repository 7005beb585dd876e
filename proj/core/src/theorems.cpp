#include "surdcf/theorems.hpp"

#include <string>

#include "surdcf/errors.hpp"
#include "surdcf/sequences.hpp"

namespace surdcf {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

Integer fib_at(int k, const Integer& x) { return fib_poly(k).evaluate(x); }

bool divisible_by_five(const Integer& v) { return divides(Integer(5), v); }

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Alpha: return "alpha";
    case Family::Lambda: return "lambda";
    case Family::Beta: return "beta";
    case Family::Mu: return "mu";
    case Family::GPoly: return "g";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "alpha") return Family::Alpha;
  if (name == "lambda") return Family::Lambda;
  if (name == "beta") return Family::Beta;
  if (name == "mu") return Family::Mu;
  if (name == "g" || name == "gpoly") return Family::GPoly;
  throw UsageError("unknown family '" + std::string(name) + "'");
}

void TheoremCase::validate() const {
  switch (family) {
    case Family::Alpha:
    case Family::Lambda:
      require(n >= 1, "n must be >= 1");
      require(N >= 1, "N must be >= 1");
      break;
    case Family::Beta:
    case Family::Mu:
      require(n >= 2, "n must be >= 2");
      require(k >= 0, "k must be >= 0");
      require(N == 5 * k + 3, "N must equal 5k + 3");
      break;
    case Family::GPoly:
      require(n >= 1, "k must be >= 1");
      require(N >= 1, "N must be >= 1");
      require(x >= 1, "x must be >= 1");
      break;
  }
}

// ---------------------------------------------------------------------------
// Alpha / Lambda

Integer alpha_discriminant(int n, const Integer& N) {
  const Integer f = fibonacci(n);
  return N * N * f * f + f * fib_like(n, 2 * N);
}

QuadraticSurd alpha_surd(int n, const Integer& N) {
  TheoremCase::alpha(n, N).validate();
  const Integer f = fibonacci(n);
  return surd_from_quadratic(1, -2 * N * f, -f * fib_like(n, 2 * N));
}

PeriodicCF predicted_alpha_cf(int n, const Integer& N) {
  TheoremCase::alpha(n, N).validate();
  const Integer head = fib_like(n + 1, 2 * N);
  const Integer tail = 2 * fib_like(n + 1, N);
  if (n % 2 == 1) return {{head}, {tail}};
  return {{head - 1}, {1, tail - 2}};
}

CFWord lambda_word(int n, const Integer& N) {
  TheoremCase::lambda(n, N).validate();
  CFWord w{2 * N};
  w.resize(static_cast<std::size_t>(n), Integer(1));
  return w;
}

QuadraticSurd lambda_surd(int n, const Integer& N) {
  const QuadraticSurd x = periodic_value({{}, lambda_word(n, N)});
  return scale(x, fibonacci(n));
}

// ---------------------------------------------------------------------------
// Beta / Mu

Integer beta_discriminant(int n, const Integer& k) {
  const Integer N = 5 * k + 3;
  const Integer l = lucas(n);
  return N * N * l * l + l * lucas_like(n, 2 * N);
}

QuadraticSurd beta_surd(int n, const Integer& k) {
  TheoremCase::beta(n, k).validate();
  const Integer N = 5 * k + 3;
  const Integer l = lucas(n);
  return surd_from_quadratic(1, -2 * N * l, -l * lucas_like(n, 2 * N));
}

Integer beta_middle_quotient(int n, const Integer& k) {
  const Integer N = 5 * k + 3;
  const Integer twice = 2 * lucas_like(n + 1, N);
  if (!divisible_by_five(twice)) {
    throw TheoremEncodingError("2 L~_{n+1}(N) = " + twice.get_str() + " is not divisible by 5");
  }
  Integer q = twice / 5;
  if (q != 2 * k * lucas(n) + 2 * fibonacci(n + 1)) {
    throw TheoremEncodingError("2/5 L~_{n+1}(N) disagrees with 2k L_n + 2 F_{n+1}");
  }
  return q;
}

PeriodicCF predicted_beta_cf(int n, const Integer& k) {
  TheoremCase::beta(n, k).validate();
  const Integer N = 5 * k + 3;
  const Integer head = lucas_like(n + 1, 2 * N);
  const Integer middle = beta_middle_quotient(n, k);
  const Integer tail = 2 * lucas_like(n + 1, N);

  PeriodicCF cf = n % 2 == 0 ? PeriodicCF{{head}, {middle, tail}}
                             : PeriodicCF{{head - 1}, {1, middle - 2, 1, tail - 2}};
  for (const auto& q : cf.period) {
    if (q < 1) throw TheoremEncodingError("predicted period entry " + q.get_str() + " < 1");
  }
  return cf;
}

CFWord mu_word(int n, const Integer& k) {
  TheoremCase::mu(n, k).validate();
  const auto ones = static_cast<std::size_t>(n - 2);
  CFWord w{2 * (5 * k + 3)};
  w.insert(w.end(), ones, Integer(1));
  for (const Integer& q : {Integer(2), Integer(1), Integer(2 * k), Integer(1), Integer(2)}) w.push_back(q);
  w.insert(w.end(), ones, Integer(1));
  return w;
}

QuadraticSurd mu_surd(int n, const Integer& k) {
  const QuadraticSurd y = periodic_value({{}, canonicalize(mu_word(n, k))});
  return scale(y, lucas(n));
}

bool mu_matrix_identity(int n, const Integer& k) {
  const Integer N = 5 * k + 3;
  const Mat2 m = word_matrix(mu_word(n, k));
  const Integer& pn = m.a;
  const Integer& pn1 = m.b;
  const Integer& qn = m.c;
  const Integer& qn1 = m.d;

  const Integer l = lucas(n);
  const Integer l1 = lucas(n - 1);
  const Integer lt_n1 = lucas_like(n + 1, N);
  const Integer lt_n_2N = lucas_like(n, 2 * N);

  // Every closed form is (numerator / 5); the numerator must be divisible.
  auto fifth_matches = [](const Integer& entry, const Integer& numerator) {
    return divisible_by_five(numerator) && 5 * entry == numerator;
  };

  const bool p_n = fifth_matches(pn, 4 * N * N * l * l + 6 * N * l * l1 + (l * l - l * l1 + l1 * l1));
  const bool p_n1 = fifth_matches(pn1, 2 * lt_n1 * lt_n_2N) &&
                    fifth_matches(pn1, 4 * N * N * l * l1 + 2 * N * (l * l - l * l1) + 2 * l * l1 +
                                           5 * (4 * k + 2) * l1 * l1);
  const bool q_n = fifth_matches(qn, 2 * l * lt_n1) && fifth_matches(qn, 2 * N * l * l + 2 * l * l1);
  const bool q_n1 = fifth_matches(qn1, 5 * (2 * k + 1) * l * l1 + (l * l + l1 * l1));
  const bool diff = fifth_matches(qn1 - pn, -4 * N * l * lt_n1);
  return p_n && p_n1 && q_n && q_n1 && diff;
}

// ---------------------------------------------------------------------------
// GPoly

Integer g_discriminant(int k, const Integer& N, const Integer& x) {
  const Integer fk = fib_at(k, x);
  return N * N * fk * fk + fk * (2 * N * fib_at(k - 1, x) + fib_at(k - 2, x));
}

QuadraticSurd g_surd(int k, const Integer& N, const Integer& x) {
  TheoremCase::gpoly(k, N, x).validate();
  const Integer fk = fib_at(k, x);
  return surd_from_quadratic(1, -2 * N * fk, -fk * (2 * N * fib_at(k - 1, x) + fib_at(k - 2, x)));
}

PeriodicCF predicted_g_cf(int k, const Integer& N, const Integer& x) {
  TheoremCase::gpoly(k, N, x).validate();
  const Integer fk = fib_at(k, x);
  const Integer fk1 = fib_at(k - 1, x);
  const Integer head = 2 * N * fk + fk1;
  const Integer tail = 2 * N * fk + 2 * fk1;
  if (k % 2 == 1) return {{head}, {tail}};
  return {{head - 1}, {1, tail - 2}};
}

// ---------------------------------------------------------------------------

VerificationReport verify(const TheoremCase& c, std::size_t max_steps) {
  c.validate();

  auto finish = [&](QuadraticSurd surd, Integer disc, PeriodicCF printed, bool closed_form) {
    PeriodicCF computed = expand(surd, max_steps);
    PeriodicCF predicted = canonical(std::move(printed));
    const bool matched = predicted == computed;
    const std::size_t len = computed.period.size();
    return VerificationReport{c,        std::move(surd), std::move(disc), std::move(predicted),
                              std::move(computed), matched, len, closed_form};
  };

  switch (c.family) {
    case Family::Alpha:
      return finish(alpha_surd(c.n, c.N), alpha_discriminant(c.n, c.N),
                    predicted_alpha_cf(c.n, c.N), true);
    case Family::Lambda: {
      QuadraticSurd s = lambda_surd(c.n, c.N);
      const bool agrees = s == alpha_surd(c.n, c.N);
      return finish(std::move(s), alpha_discriminant(c.n, c.N), predicted_alpha_cf(c.n, c.N),
                    agrees);
    }
    case Family::Beta:
      return finish(beta_surd(c.n, c.k), beta_discriminant(c.n, c.k), predicted_beta_cf(c.n, c.k),
                    true);
    case Family::Mu: {
      QuadraticSurd s = mu_surd(c.n, c.k);
      const bool agrees = s == beta_surd(c.n, c.k) && mu_matrix_identity(c.n, c.k);
      return finish(std::move(s), beta_discriminant(c.n, c.k), predicted_beta_cf(c.n, c.k), agrees);
    }
    case Family::GPoly:
      return finish(g_surd(c.n, c.N, c.x), g_discriminant(c.n, c.N, c.x),
                    predicted_g_cf(c.n, c.N, c.x), true);
  }
  throw UsageError("unknown family");
}

}  // namespace surdcf
