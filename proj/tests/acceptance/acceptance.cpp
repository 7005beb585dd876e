// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"
#include "oracles.hpp"
#include "surdcf/convergents.hpp"
#include "surdcf/errors.hpp"
#include "surdcf/poly_families.hpp"
#include "surdcf/render.hpp"
#include "surdcf/roots.hpp"
#include "surdcf/sequences.hpp"
#include "surdcf/surd.hpp"
#include "surdcf/theorems.hpp"

using namespace surdcf;
using Json = nlohmann::json;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct CliRun {
  int code = 0;
  std::vector<Json> records;
  std::string err;
  double seconds = 0.0;
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "surdcf");
  std::ostringstream out, err;
  const auto start = std::chrono::steady_clock::now();
  CliRun r;
  r.code = cli::run(args, out, err);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.err = err.str();
  std::istringstream in(out.str());
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) r.records.push_back(Json::parse(line));
  }
  return r;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

PeriodicCF hand_cf(const QuadraticSurd& s) {
  const auto hand = oracle::hand_expand(s.p().get_si(), s.q().get_si(), s.d().get_si());
  PeriodicCF raw;
  for (std::size_t j = 0; j < hand.quotients.size(); ++j) {
    (j < hand.period_start ? raw.preperiod : raw.period).emplace_back(hand.quotients[j]);
  }
  return canonical(raw);
}

// Counts records whose status is ok with the expected period length.
struct SweepTally {
  std::size_t total = 0, ok = 0, degenerate = 0, bad_length = 0;
};

SweepTally tally(const std::vector<Json>& records, const char* index_key, bool index_is_string) {
  SweepTally t;
  for (const auto& rec : records) {
    ++t.total;
    const std::string status = rec["status"];
    if (status == "degenerate") {
      ++t.degenerate;
      continue;
    }
    if (status != "ok") continue;
    ++t.ok;
    const long idx = index_is_string ? std::stol(rec[index_key].get<std::string>()) : rec[index_key].get<long>();
    const std::size_t expected = rec["family"] == "beta" || rec["family"] == "mu" ? (idx % 2 == 0 ? 2u : 4u)
                                                                                 : (idx % 2 == 1 ? 1u : 2u);
    if (rec["period_length"].get<std::size_t>() != expected) ++t.bad_length;
  }
  return t;
}

Outcome criterion1() {
  const CliRun r = run_cli({"verify", "alpha", "--n", "1..20", "--N", "1..10"});
  const SweepTally t = tally(r.records, "n", false);
  const bool pass = r.code == 0 && t.total == 200 && t.ok == 200 && t.bad_length == 0 && r.seconds < 5.0;
  return {pass, "alpha n=1..20 N=1..10: " + std::to_string(t.ok) + "/" + std::to_string(t.total) +
                    " matched, period-length violations " + std::to_string(t.bad_length) + ", " +
                    fmt("%.3f s", r.seconds) + " (limit 5 s)"};
}

Outcome criterion2() {
  std::size_t cases = 0, failures = 0;
  for (int n = 1; n <= 20; ++n) {
    for (long N = 1; N <= 10; ++N) {
      ++cases;
      const QuadraticSurd lambda = scale(periodic_value({{}, lambda_word(n, N)}), fibonacci(n));
      const QuadraticSurd alpha = alpha_surd(n, N);
      const Continuant c = continuant(lambda_word(n, N));
      const bool ok = lambda == alpha && expand(lambda) == canonical(predicted_alpha_cf(n, N)) &&
                      Rational(c.p, c.q) == Rational(fib_like(n + 1, 2 * N), fibonacci(n));
      if (!ok) ++failures;
    }
  }
  return {failures == 0, "F_n value([(2N, 1^(n-1))]) == alpha_n(N), expansion and continuant: " +
                             std::to_string(cases - failures) + "/" + std::to_string(cases) + " exact"};
}

Outcome criterion3() {
  const CliRun beta = run_cli({"verify", "beta", "--n", "2..15", "--k", "0..5"});
  const CliRun mu = run_cli({"verify", "mu", "--n", "2..15", "--k", "0..5"});
  const SweepTally tb = tally(beta.records, "n", false);
  const SweepTally tm = tally(mu.records, "n", false);

  // The k = 0 words contain the 2k = 0 quotient that must collapse.
  std::size_t collapse_ok = 0, matrix_ok = 0;
  for (int n = 2; n <= 15; ++n) {
    const CFWord w = mu_word(n, 0);
    const CFWord c = canonicalize(w);
    if (c.size() + 2 == w.size() && mu_surd(n, 0) == beta_surd(n, 0)) ++collapse_ok;
    for (long k = 0; k <= 5; ++k) matrix_ok += mu_matrix_identity(n, k) ? 1 : 0;
  }
  const double seconds = beta.seconds + mu.seconds;
  const bool pass = beta.code == 0 && mu.code == 0 && tb.ok == 84 && tm.ok == 84 && tb.bad_length == 0 &&
                    tm.bad_length == 0 && collapse_ok == 14 && matrix_ok == 84 && seconds < 10.0;
  return {pass, "beta " + std::to_string(tb.ok) + "/84, mu " + std::to_string(tm.ok) +
                    "/84 matched (mu == beta and closed forms in each record); k=0 collapse " +
                    std::to_string(collapse_ok) + "/14; matrix entries " + std::to_string(matrix_ok) + "/84; " +
                    fmt("%.3f s", seconds) + " (limit 10 s)"};
}

Outcome criterion4() {
  struct Anchor {
    const char* name;
    QuadraticSurd surd;
    QuadraticSurd expected;
    PeriodicCF printed;
  };
  const std::vector<Anchor> anchors{
      {"alpha_1(1)", alpha_surd(1, 1), QuadraticSurd(1, 1, 2), {{2}, {2}}},
      {"beta_2(3)", beta_surd(2, 0), QuadraticSurd(9, 1, 105), {{19}, {4, 20}}},
      {"beta_3(3)", beta_surd(3, 0), QuadraticSurd(12, 1, 220), {{26}, {1, 4, 1, 28}}},
      {"G_2(1,2)", g_surd(2, 1, 2), QuadraticSurd(2, 1, 8), {{4}, {1, 4}}},
  };
  std::string detail;
  bool pass = true;
  for (const auto& a : anchors) {
    const PeriodicCF hand = hand_cf(a.surd);
    const bool ok = a.surd == a.expected && hand == expand(a.surd) && hand == canonical(a.printed);
    pass = pass && ok;
    detail += std::string(detail.empty() ? "" : "; ") + a.name + " " + to_string(a.surd) + " = " +
              to_string(expand(a.surd)) + (ok ? "" : " MISMATCH");
  }
  return {pass, detail};
}

Outcome criterion5() {
  const CliRun r = run_cli({"verify", "g", "--k", "1..12", "--N", "1..6", "--x", "1..6"});
  const SweepTally t = tally(r.records, "k", true);
  const std::size_t mismatched = t.total - t.ok - t.degenerate;
  const bool pass = t.total == 432 && mismatched == 0 && t.bad_length == 0 && t.ok + t.degenerate == t.total;
  return {pass, "g k=1..12 N=1..6 x=1..6: " + std::to_string(t.ok) + "/" + std::to_string(t.total) +
                    " matched, " + std::to_string(t.degenerate) + " degenerate reported, " +
                    std::to_string(mismatched) + " mismatched, period-length violations " +
                    std::to_string(t.bad_length)};
}

Outcome criterion6() {
  std::size_t checks = 0, failures = 0;
  auto count = [&](bool ok) {
    ++checks;
    if (!ok) ++failures;
  };
  for (int n = 2; n <= 200; ++n) {
    for (auto id : {Identity::Fid, Identity::Luc5, Identity::Id1, Identity::Id2}) count(identity_check(id, n));
  }
  for (int k = 2; k <= 60; ++k) count(identity_check(Identity::Idf2, k));
  for (int n = 2; n <= 30; ++n) {
    for (long m = 1; m <= 20; ++m) count(ratio_lemma_check(n, m));
  }
  return {failures == 0, std::to_string(checks) + " identity and ratio-lemma checks, " + std::to_string(failures) +
                             " failures"};
}

Outcome criterion7() {
  std::size_t checks = 0, failures = 0;
  auto count = [&](bool ok) {
    ++checks;
    if (!ok) ++failures;
  };
  for (int k = 1; k <= 6; ++k) {
    for (long N = 1; N <= 5; ++N) {
      for (int r = 0; r <= k; ++r) count(subsequence_recurrence_check(k, N, r, 8));
      const auto family = residue_minus1_family(k, N, 8);
      for (int m = 0; m < 8; ++m) {
        const IntPolynomial& q = family[static_cast<std::size_t>(m)];
        count(divide_exact(q, fib_poly(k + 1)).has_value());
        count(q == residue_minus1_closed_form(k, N, m));
      }
    }
  }
  for (int n = 0; n <= 12; ++n) {
    for (long N = 2; N <= 6; ++N) {
      count(shifted_Q_closed_form(n, N) == to_rational(shifted_Q(n, N)));
      count(shifted_Q_from_family(n, N) == to_rational(shifted_Q(n, N)));
    }
  }
  for (int n = 1; n <= 15; ++n) {
    for (long N = 1; N <= 6; ++N) count(chebyshev_relation_check(n, N));
  }
  return {failures == 0, std::to_string(checks) + " exact polynomial checks, " + std::to_string(failures) +
                             " failures"};
}

Outcome criterion8() {
  double worst_curve = 0.0, worst_match = 0.0;
  for (int n = 1; n <= 12; ++n) {
    for (long N = 2; N <= 6; ++N) {
      const auto closed = hyperbola_roots(n, N);
      worst_curve = std::max(worst_curve, locus_residual(closed, Curve::H1, CurveParams{N}));
      worst_match = std::max(worst_match, multiset_distance(closed, numeric_roots(shifted_Q(n, N))));
    }
  }
  const bool pass = worst_curve < 1e-10 && worst_match < 1e-8;
  return {pass, "hyperbola residual max " + fmt("%.3g", worst_curve) + " (< 1e-10), closed vs numeric max " +
                    fmt("%.3g", worst_match) + " (< 1e-8)"};
}

Outcome criterion9() {
  double worst_formula = 0.0, worst_interval = 0.0;
  std::size_t even_ok = 0, even_total = 0, outside_total = 0;
  for (int n = 1; n <= 15; ++n) {
    for (long N = 1; N <= 6; ++N) {
      const LocusReport odd = locus_chebyshev_k1(n, N, false);
      std::vector<ComplexPoint> expected;
      for (int j = 0; j <= n; ++j) {
        expected.push_back({2.0 / static_cast<double>(N) * (std::cos(j * std::numbers::pi / (n + 1)) - 1.0), 0.0});
      }
      worst_formula = std::max(worst_formula, multiset_distance(odd.roots, expected));
      worst_interval = std::max(worst_interval, odd.max_residual);

      const LocusReport even = locus_chebyshev_k1(n, N, true);
      ++even_total;
      if (even.max_residual == 0.0) ++even_ok;
      const double lo = -4.0 / static_cast<double>(N);
      for (const auto& p : even.roots) {
        if (std::abs(p.im) < 1e-8 && !(p.re > lo && p.re <= 0.0)) ++outside_total;
      }
    }
  }
  const bool odd_pass = worst_formula < 1e-10 && worst_interval < 1e-10;
  const bool even_pass = even_ok == even_total;
  return {odd_pass && even_pass,
          "q_{2n+1}: formula error max " + fmt("%.3g", worst_formula) + ", interval violation max " +
              fmt("%.3g", worst_interval) + (odd_pass ? " (ok)" : " (FAIL)") + "; q_{2n}: " +
              std::to_string(even_ok) + "/" + std::to_string(even_total) +
              " cases with exactly one real root outside (-4/N, 0]; real roots outside over all cases: " +
              std::to_string(outside_total)};
}

Outcome criterion10() {
  const double r6 = locus_quartic_k4(6).max_residual;
  const double r12 = locus_quartic_k4(12).max_residual;
  return {r12 < r6, "quartic residual m=6 " + fmt("%.3g", r6) + ", m=12 " + fmt("%.3g", r12) +
                        " (strict decrease required)"};
}

Outcome criterion11() {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> pre_len(0, 8), per_len(1, 8);
  std::uniform_int_distribution<int> head(-30, 30);
  std::size_t failures = 0;
  for (int i = 0; i < 1000; ++i) {
    PeriodicCF cf{oracle::random_word(rng, pre_len(rng), 1, 30), oracle::random_word(rng, per_len(rng), 1, 30)};
    if (!cf.preperiod.empty()) cf.preperiod.front() = head(rng);
    cf = canonical(cf);
    const QuadraticSurd s = periodic_value(cf);
    if (expand(s) != cf) ++failures;
    if (periodic_value(expand(s)) != s) ++failures;
  }
  std::uniform_int_distribution<long> pd(-200, 200), qd(-90, 90), dd(2, 5000);
  for (int i = 0; i < 1000; ++i) {
    long q = 0;
    while (q == 0) q = qd(rng);
    long d = dd(rng);
    while (is_perfect_square(d)) d = dd(rng);
    const QuadraticSurd s(pd(rng), q, d);
    const PeriodicCF cf = expand(s);
    if (periodic_value(cf) != s) ++failures;
    if (expand(periodic_value(cf)) != cf) ++failures;
  }
  return {failures == 0, "1000 random canonical CFs and 1000 random surds, both directions: " +
                             std::to_string(failures) + " failures"};
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                       criterion5, criterion6, criterion7, criterion8,
                                                       criterion9, criterion10, criterion11};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " AC" << i + 1 << " " << o.detail << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " acceptance criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
