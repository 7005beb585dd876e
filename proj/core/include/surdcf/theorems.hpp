#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "surdcf/convergents.hpp"
#include "surdcf/integer.hpp"
#include "surdcf/surd.hpp"

namespace surdcf {

// The five constructions whose short-period expansions are predicted:
//   Alpha   N F_n + sqrt(B_n(N)), the larger root of x^2 - 2N F_n x - F_n F~_n(2N)
//   Lambda  F_n * [(2N, 1^(n-1))]
//   Beta    N L_n + sqrt(C_n(N)) with N = 5k + 3
//   Mu      L_n * [(2N, 1^(n-2), 2, 1, 2k, 1, 2, 1^(n-2))] with N = 5k + 3
//   GPoly   N F_k(x) + sqrt(beta_k(N, x)), i.e. F_k(x) * [(2N, x^(k-1))]
enum class Family { Alpha, Lambda, Beta, Mu, GPoly };

std::string_view family_name(Family f);
/// "alpha", "lambda", "beta", "mu", "g" (or "gpoly"). Throws UsageError.
Family parse_family(std::string_view name);

struct TheoremCase {
  Family family = Family::Alpha;
  int n = 0;      // sequence index; the polynomial index k for GPoly
  Integer N = 0;  // 5k + 3 for Beta and Mu
  Integer k = 0;  // Beta and Mu only
  Integer x = 0;  // GPoly only

  static TheoremCase alpha(int n, const Integer& N) { return {Family::Alpha, n, N, 0, 0}; }
  static TheoremCase lambda(int n, const Integer& N) { return {Family::Lambda, n, N, 0, 0}; }
  static TheoremCase beta(int n, const Integer& k) { return {Family::Beta, n, 5 * k + 3, k, 0}; }
  static TheoremCase mu(int n, const Integer& k) { return {Family::Mu, n, 5 * k + 3, k, 0}; }
  static TheoremCase gpoly(int k, const Integer& N, const Integer& x) {
    return {Family::GPoly, k, N, 0, x};
  }

  /// Throws UsageError when the parameters are outside the family's range.
  void validate() const;
};

struct VerificationReport {
  TheoremCase theorem_case;
  QuadraticSurd surd;
  Integer discriminant;    // B_n(N), C_n(N) or beta_k(N, x)
  PeriodicCF predicted;    // canonical form of the printed expansion
  PeriodicCF computed;     // expand(surd)
  bool matched = false;    // predicted == computed
  std::size_t period_length = 0;
  // Lambda: equals the Alpha surd. Mu: equals the Beta surd and the proof's
  // matrix closed forms hold. Other families: true.
  bool closed_form_agrees = true;
};

// Alpha / Lambda.
Integer alpha_discriminant(int n, const Integer& N);
QuadraticSurd alpha_surd(int n, const Integer& N);
/// Printed form: [F~_{n+1}(2N); (2 F~_{n+1}(N))] for odd n and
/// [F~_{n+1}(2N) - 1; (1, 2 F~_{n+1}(N) - 2)] for even n.
PeriodicCF predicted_alpha_cf(int n, const Integer& N);
CFWord lambda_word(int n, const Integer& N);
QuadraticSurd lambda_surd(int n, const Integer& N);

// Beta / Mu, N = 5k + 3.
Integer beta_discriminant(int n, const Integer& k);
QuadraticSurd beta_surd(int n, const Integer& k);
/// (2/5) L~_{n+1}(N). Throws TheoremEncodingError unless the division is
/// exact and equals 2k L_n + 2 F_{n+1}.
Integer beta_middle_quotient(int n, const Integer& k);
/// [L~_{n+1}(2N); (2/5 L~_{n+1}(N), 2 L~_{n+1}(N))] for even n and
/// [L~_{n+1}(2N) - 1; (1, 2/5 L~_{n+1}(N) - 2, 1, 2 L~_{n+1}(N) - 2)] for odd n.
PeriodicCF predicted_beta_cf(int n, const Integer& k);
/// The period word as written, including the 2k entry (0 when k = 0).
CFWord mu_word(int n, const Integer& k);
QuadraticSurd mu_surd(int n, const Integer& k);
/// Multiplies out the period word and checks p_n, p_{n-1}, q_n, q_{n-1}
/// against their closed forms in L_n, L_{n-1}, L~_{n+1}(N), L~_n(2N),
/// including exact divisibility by 5 and q_{n-1} - p_n = -4/5 N L_n L~_{n+1}(N).
bool mu_matrix_identity(int n, const Integer& k);

// GPoly.
Integer g_discriminant(int k, const Integer& N, const Integer& x);
/// Throws NotQuadraticIrrational when beta_k(N, x) is a perfect square.
QuadraticSurd g_surd(int k, const Integer& N, const Integer& x);
PeriodicCF predicted_g_cf(int k, const Integer& N, const Integer& x);

/// Builds the surd, expands it and compares with the canonical prediction.
VerificationReport verify(const TheoremCase& c, std::size_t max_steps = kDefaultMaxSteps);

}  // namespace surdcf
