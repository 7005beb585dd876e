#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "surdcf/convergents.hpp"
#include "surdcf/errors.hpp"
#include "surdcf/poly_families.hpp"
#include "surdcf/render.hpp"
#include "surdcf/roots.hpp"
#include "surdcf/sequences.hpp"
#include "surdcf/surd.hpp"
#include "surdcf/theorems.hpp"

namespace surdcf::cli {
namespace {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw UsageError("format must be text, json or csv, got '" + s + "'");
}

struct Range {
  long lo = 0;
  long hi = -1;
};

long parse_long(const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

// "a..b" or a single value.
Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_long(text);
  } else {
    r.lo = parse_long(text.substr(0, dots));
    r.hi = parse_long(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw UsageError("empty range '" + text + "'");
  return r;
}

// Everything one invocation needs after flag parsing.
struct RunConfig {
  std::string command;
  std::string selector;  // family, poly kind, curve or identity name
  std::string n, N, k, x, m, count;
  std::size_t max_steps = kDefaultMaxSteps;
  double tolerance = 1e-9;
  std::string format;
  std::string out_path;

  std::vector<std::string> surd_args, quadratic_args;
  std::string pre, period;

  Format output_format(Format fallback) const {
    return format.empty() ? fallback : parse_format(format);
  }
  void validate() const {
    if (!(tolerance > 0)) throw UsageError("tolerance must be positive");
    if (max_steps == 0) throw UsageError("max-steps must be positive");
    if (!format.empty()) parse_format(format);
  }
};

Range required_range(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string("missing ") + flag);
  return parse_range(value);
}

long required_long(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string("missing ") + flag);
  return parse_long(value);
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json string_array(std::span<const Integer> values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(v.get_str());
  return arr;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_field(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return csv_escape(v.get<std::string>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_array()) {
    std::string joined;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) joined += ",";
      joined += v[i].is_string() ? v[i].get<std::string>() : v[i].dump();
    }
    return csv_escape(joined);
  }
  return v.dump();
}

// Streams records as JSON lines or CSV (header from the first record's keys).
class RecordSink {
 public:
  RecordSink(std::ostream& os, Format format) : os_(os), format_(format) {}

  void emit(const Json& record) {
    if (format_ == Format::Csv) {
      if (!header_written_) {
        bool first = true;
        for (const auto& item : record.items()) {
          os_ << (first ? "" : ",") << item.key();
          first = false;
        }
        os_ << '\n';
        header_written_ = true;
      }
      bool first = true;
      for (const auto& item : record.items()) {
        os_ << (first ? "" : ",") << csv_field(item.value());
        first = false;
      }
      os_ << '\n';
    } else {
      os_ << record.dump(-1, ' ', false, Json::error_handler_t::strict) << '\n';
    }
  }

 private:
  std::ostream& os_;
  Format format_;
  bool header_written_ = false;
};

// ---------------------------------------------------------------------------
// expand / value

int cmd_expand(const RunConfig& cfg, std::ostream& out) {
  const bool by_surd = !cfg.surd_args.empty();
  if (by_surd == !cfg.quadratic_args.empty()) {
    throw UsageError("expand needs exactly one of --surd P Q D or --quadratic a b c");
  }
  const auto& a = by_surd ? cfg.surd_args : cfg.quadratic_args;
  const QuadraticSurd s =
      by_surd ? QuadraticSurd(parse_integer(a[0]), parse_integer(a[1]), parse_integer(a[2]))
              : surd_from_quadratic(parse_integer(a[0]), parse_integer(a[1]), parse_integer(a[2]));
  const PeriodicCF cf = expand(s, cfg.max_steps);

  const Format format = cfg.output_format(Format::Text);
  if (format == Format::Text) {
    out << to_string(cf) << '\n';
    return kExitOk;
  }
  RecordSink sink(out, format);
  sink.emit(Json{{"schema_version", kSchemaVersion},
                 {"surd", to_string(s)},
                 {"cf", to_string(cf)},
                 {"preperiod", string_array(cf.preperiod)},
                 {"period", string_array(cf.period)},
                 {"period_length", cf.period.size()},
                 {"reduced", is_reduced(s)}});
  return kExitOk;
}

int cmd_value(const RunConfig& cfg, std::ostream& out) {
  if (cfg.period.empty()) throw UsageError("value needs --period");
  const PeriodicCF cf{parse_word(cfg.pre), parse_word(cfg.period)};
  const QuadraticSurd s = periodic_value(cf);
  const auto poly = minimal_polynomial(s);

  const Format format = cfg.output_format(Format::Text);
  if (format == Format::Text) {
    out << to_string(s) << '\n'
        << "P=" << s.p().get_str() << " Q=" << s.q().get_str() << " D=" << s.d().get_str() << '\n'
        << "minimal polynomial: " << quadratic_to_string(poly) << '\n';
    return kExitOk;
  }
  RecordSink sink(out, format);
  sink.emit(Json{{"schema_version", kSchemaVersion},
                 {"surd", to_string(s)},
                 {"P", s.p().get_str()},
                 {"Q", s.q().get_str()},
                 {"D", s.d().get_str()},
                 {"minimal_polynomial", string_array(std::vector<Integer>(poly.begin(), poly.end()))},
                 {"algebraic_integer", poly[0] == 1}});
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

Json report_record(const TheoremCase& c, const VerificationReport* report, const std::string& status) {
  const bool uses_n = c.family != Family::GPoly;
  Json rec{{"schema_version", kSchemaVersion}, {"family", std::string(family_name(c.family))}};
  rec["n"] = uses_n ? Json(c.n) : Json(nullptr);
  rec["N"] = c.N.get_str();
  if (c.family == Family::Beta || c.family == Family::Mu) {
    rec["k"] = c.k.get_str();
  } else if (c.family == Family::GPoly) {
    rec["k"] = std::to_string(c.n);
  } else {
    rec["k"] = nullptr;
  }
  rec["x"] = c.family == Family::GPoly ? Json(c.x.get_str()) : Json(nullptr);
  if (report) {
    rec["surd"] = to_string(report->surd);
    rec["discriminant"] = report->discriminant.get_str();
    rec["predicted"] = to_string(report->predicted);
    rec["computed"] = to_string(report->computed);
    rec["matched"] = report->matched;
    rec["period_length"] = report->period_length;
    rec["closed_form_agrees"] = report->closed_form_agrees;
  } else {
    for (const char* key : {"surd", "discriminant", "predicted", "computed"}) rec[key] = nullptr;
    rec["matched"] = false;
    rec["period_length"] = nullptr;
    rec["closed_form_agrees"] = false;
  }
  rec["status"] = status;
  return rec;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Family family = parse_family(cfg.selector);
  std::vector<TheoremCase> cases;
  switch (family) {
    case Family::Alpha:
    case Family::Lambda: {
      const Range n = required_range(cfg.n, "--n"), N = required_range(cfg.N, "--N");
      for (long i = n.lo; i <= n.hi; ++i)
        for (long j = N.lo; j <= N.hi; ++j)
          cases.push_back(family == Family::Alpha ? TheoremCase::alpha(static_cast<int>(i), j)
                                                  : TheoremCase::lambda(static_cast<int>(i), j));
      break;
    }
    case Family::Beta:
    case Family::Mu: {
      const Range n = required_range(cfg.n, "--n"), k = required_range(cfg.k, "--k");
      for (long i = n.lo; i <= n.hi; ++i)
        for (long j = k.lo; j <= k.hi; ++j)
          cases.push_back(family == Family::Beta ? TheoremCase::beta(static_cast<int>(i), j)
                                                 : TheoremCase::mu(static_cast<int>(i), j));
      break;
    }
    case Family::GPoly: {
      const Range k = required_range(cfg.k, "--k"), N = required_range(cfg.N, "--N"),
                  x = required_range(cfg.x, "--x");
      for (long i = k.lo; i <= k.hi; ++i)
        for (long j = N.lo; j <= N.hi; ++j)
          for (long l = x.lo; l <= x.hi; ++l) cases.push_back(TheoremCase::gpoly(static_cast<int>(i), j, l));
      break;
    }
  }
  for (const auto& c : cases) c.validate();

  const Format format = cfg.output_format(Format::Json);
  RecordSink sink(out, format == Format::Text ? Format::Json : format);
  std::size_t matched = 0, degenerate = 0, failed = 0;
  for (const auto& c : cases) {
    try {
      const VerificationReport report = verify(c, cfg.max_steps);
      const bool ok = report.matched && report.closed_form_agrees;
      ok ? ++matched : ++failed;
      sink.emit(report_record(c, &report, ok ? "ok" : "mismatch"));
    } catch (const NotQuadraticIrrational&) {
      ++degenerate;
      sink.emit(report_record(c, nullptr, "degenerate"));
    } catch (const TheoremEncodingError&) {
      ++failed;
      sink.emit(report_record(c, nullptr, "encoding-error"));
    }
  }
  err << "verify " << family_name(family) << ": cases=" << cases.size() << " matched=" << matched
      << " mismatched=" << failed << " degenerate=" << degenerate << '\n';
  return matched == cases.size() ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------
// poly

int cmd_poly(const RunConfig& cfg, std::ostream& out) {
  struct Row {
    long index;
    IntPolynomial poly;
  };
  std::vector<Row> rows;
  Json params = Json::object();

  const std::string& kind = cfg.selector;
  if (kind == "family" || kind == "minus1") {
    const long k = required_long(cfg.k, "--k");
    const long N = required_long(cfg.N, "--N");
    const long count = required_long(cfg.count, "--count");
    if (k < 1 || N < 1 || count < 1) throw UsageError("poly " + kind + " needs k, N, count >= 1");
    params = Json{{"k", k}, {"N", std::to_string(N)}};
    if (kind == "family") {
      const auto qs = convergent_denominators(static_cast<int>(k), N, static_cast<int>(count));
      for (std::size_t i = 0; i < qs.size(); ++i) rows.push_back({static_cast<long>(i) + 1, qs[i]});
    } else {
      const auto qs = residue_minus1_family(static_cast<int>(k), N, static_cast<int>(count));
      for (std::size_t i = 0; i < qs.size(); ++i) rows.push_back({static_cast<long>(i), qs[i]});
    }
  } else if (kind == "shifted") {
    const long n = required_long(cfg.n, "--n");
    const long N = required_long(cfg.N, "--N");
    if (n < 0 || N < 2) throw UsageError("poly shifted needs n >= 0 and N >= 2");
    params = Json{{"k", 2}, {"N", std::to_string(N)}};
    rows.push_back({n, shifted_Q(static_cast<int>(n), N)});
  } else if (kind == "gpoly") {
    const long k = required_long(cfg.k, "--k");
    const long N = required_long(cfg.N, "--N");
    if (k < 0 || N < 1) throw UsageError("poly gpoly needs k >= 0 and N >= 1");
    params = Json{{"k", k}, {"N", std::to_string(N)}};
    rows.push_back({k, g_poly(static_cast<int>(k), N)});
  } else {
    throw UsageError("poly kind must be family, minus1, shifted or gpoly, got '" + kind + "'");
  }

  const Format format = cfg.output_format(Format::Text);
  if (format == Format::Text) {
    for (const auto& r : rows) out << coefficients_csv(r.poly) << '\n';
    return kExitOk;
  }
  RecordSink sink(out, format);
  for (const auto& r : rows) {
    sink.emit(Json{{"schema_version", kSchemaVersion},
                   {"kind", kind},
                   {"k", params["k"]},
                   {"N", params["N"]},
                   {"index", r.index},
                   {"degree", r.poly.degree()},
                   {"coefficients", string_array(r.poly.coefficients())}});
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// locus

Json roots_json(const LocusReport& r) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < r.roots.size(); ++i) {
    Json root{{"re", r.roots[i].re}, {"im", r.roots[i].im}};
    root["residual"] = i < r.residuals.size() ? Json(r.residuals[i]) : Json(nullptr);
    arr.push_back(root);
  }
  return arr;
}

void emit_locus(std::ostream& out, Format format, RecordSink& sink, const LocusReport& r,
                const Json& extra) {
  if (format == Format::Json) {
    Json rec{{"schema_version", kSchemaVersion},
             {"curve", std::string(curve_name(r.curve))},
             {"k", r.k},
             {"N", r.N.get_str()},
             {"n", r.n},
             {"roots", roots_json(r)},
             {"max_residual", r.max_residual}};
    for (const auto& item : extra.items()) rec[item.key()] = item.value();
    sink.emit(rec);
    return;
  }
  if (format == Format::Csv) {
    for (std::size_t i = 0; i < r.roots.size(); ++i) {
      sink.emit(Json{{"schema_version", kSchemaVersion},
                     {"curve", std::string(curve_name(r.curve))},
                     {"k", r.k},
                     {"N", r.N.get_str()},
                     {"n", r.n},
                     {"index", i},
                     {"re", r.roots[i].re},
                     {"im", r.roots[i].im},
                     {"residual", i < r.residuals.size() ? Json(r.residuals[i]) : Json(nullptr)}});
    }
    return;
  }
  out << curve_name(r.curve) << " k=" << r.k << " N=" << r.N.get_str() << " n=" << r.n << '\n';
  for (std::size_t i = 0; i < r.roots.size(); ++i) {
    out << "  " << fmt_double(r.roots[i].re) << ' ' << fmt_double(r.roots[i].im);
    if (i < r.residuals.size()) out << ' ' << fmt_double(r.residuals[i]);
    out << '\n';
  }
  out << "  max_residual=" << fmt_double(r.max_residual);
  for (const auto& item : extra.items()) {
    out << ' ' << item.key() << '=' << (item.value().is_number_float() ? fmt_double(item.value().get<double>())
                                                                      : item.value().dump());
  }
  out << '\n';
}

int cmd_locus(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Curve curve = parse_curve(cfg.selector);
  const Format format = cfg.output_format(Format::Text);
  RecordSink sink(out, format);
  bool passed = true;

  switch (curve) {
    case Curve::H1: {
      const long n = required_long(cfg.n, "--n");
      const long N = required_long(cfg.N, "--N");
      if (n < 1 || N < 2) throw UsageError("locus h1 needs n >= 1 and N >= 2");
      const LocusReport r = locus_h1(static_cast<int>(n), N);
      const double dist = multiset_distance(r.roots, numeric_roots(shifted_Q(static_cast<int>(n), N)));
      passed = r.max_residual < cfg.tolerance && dist < 1e-8;
      emit_locus(out, format, sink, r, Json{{"numeric_distance", dist}, {"passed", passed}});
      break;
    }
    case Curve::ChebyshevIntervalK1: {
      const long n = required_long(cfg.n, "--n");
      const long N = required_long(cfg.N, "--N");
      if (n < 1 || N < 1) throw UsageError("locus chebk1 needs n >= 1 and N >= 1");
      const LocusReport odd = locus_chebyshev_k1(static_cast<int>(n), N, false);
      std::vector<ComplexPoint> expected;
      for (long j = 0; j <= n; ++j) {
        expected.push_back({2.0 / static_cast<double>(N) *
                                (std::cos(static_cast<double>(j) * std::numbers::pi / static_cast<double>(n + 1)) - 1.0),
                            0.0});
      }
      const double formula_error = multiset_distance(odd.roots, expected);
      const bool odd_ok = odd.max_residual <= cfg.tolerance && formula_error <= cfg.tolerance;
      emit_locus(out, format, sink, odd,
                 Json{{"index", 2 * n + 1}, {"formula_error", formula_error}, {"passed", odd_ok}});

      const LocusReport even = locus_chebyshev_k1(static_cast<int>(n), N, true);
      const double lo = -4.0 / static_cast<double>(N);
      long inside = 0, outside = 0;
      for (const auto& p : even.roots) {
        if (std::abs(p.im) >= 1e-8) continue;
        (p.re > lo && p.re <= 0.0) ? ++inside : ++outside;
      }
      const bool even_ok = even.max_residual == 0.0;
      emit_locus(out, format, sink, even,
                 Json{{"index", 2 * n},
                      {"real_inside", inside},
                      {"real_outside", outside},
                      {"claimed_inside", n - 1},
                      {"claimed_outside", 1},
                      {"passed", even_ok}});
      passed = odd_ok && even_ok;
      break;
    }
    case Curve::QuarticK4N3: {
      if (cfg.m.empty()) throw UsageError("locus quartic-k4 needs --m");
      std::vector<double> residuals;
      for (const auto& m : parse_word(cfg.m)) {
        if (m < 1 || m > 64) throw UsageError("m must lie in 1..64");
        const LocusReport r = locus_quartic_k4(static_cast<int>(m.get_si()));
        residuals.push_back(r.max_residual);
        emit_locus(out, format, sink, r, Json::object());
      }
      if (residuals.size() == 1) {
        passed = residuals[0] < cfg.tolerance;
        err << "quartic-k4 residual " << (passed ? "within" : "above") << " tolerance\n";
      } else {
        for (std::size_t i = 1; i < residuals.size(); ++i) passed = passed && residuals[i] < residuals[i - 1];
        err << "quartic-k4 decreasing trend " << (passed ? "holds" : "fails") << '\n';
      }
      break;
    }
  }
  return passed ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------
// identity

int cmd_identity(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Identity id = parse_identity(cfg.selector);
  const Range n = required_range(cfg.n, "--n");
  std::optional<Rational> x;
  if (!cfg.x.empty()) {
    Rational v;
    if (v.set_str(cfg.x, 10) != 0 || v.get_den() == 0) throw UsageError("bad --x '" + cfg.x + "'");
    v.canonicalize();
    x = v;
  }
  const Format format = cfg.output_format(Format::Text);
  RecordSink sink(out, format);
  std::size_t failures = 0;
  for (long i = n.lo; i <= n.hi; ++i) {
    const bool ok = identity_check(id, static_cast<int>(i), x);
    if (!ok) ++failures;
    if (format == Format::Text) {
      out << identity_name(id) << " n=" << i << ' ' << (ok ? "holds" : "FAILS") << '\n';
    } else {
      sink.emit(Json{{"schema_version", kSchemaVersion},
                     {"identity", std::string(identity_name(id))},
                     {"n", i},
                     {"x", x ? Json(x->get_str()) : Json(nullptr)},
                     {"holds", ok}});
    }
  }
  err << "identity " << identity_name(id) << ": failures=" << failures << '\n';
  return failures == 0 ? kExitOk : kExitMismatch;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool with_steps) {
  sub->add_option("--format", cfg.format, "Output format: text, json or csv");
  sub->add_option("--out", cfg.out_path, "Write records to PATH instead of standard output");
  sub->add_option("--tolerance", cfg.tolerance, "Numeric tolerance");
  if (with_steps) sub->add_option("--max-steps", cfg.max_steps, "Partial-quotient budget for expansions");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact continued fractions of quadratic surds and their integer multiples"};
  app.name(args.empty() ? "surdcf" : args[0]);
  app.require_subcommand(1);

  auto* expand_cmd = app.add_subcommand("expand", "Periodic continued fraction of a surd");
  expand_cmd->add_option("--surd", cfg.surd_args, "P Q D for (P+sqrt(D))/Q")->expected(3);
  expand_cmd->add_option("--quadratic", cfg.quadratic_args, "a b c: larger root of ax^2+bx+c")->expected(3);
  add_common(expand_cmd, cfg, true);

  auto* value_cmd = app.add_subcommand("value", "Exact surd of [pre; (period)]");
  value_cmd->add_option("--pre", cfg.pre, "Comma-separated preperiod");
  value_cmd->add_option("--period", cfg.period, "Comma-separated period")->required();
  add_common(value_cmd, cfg, false);

  auto* verify_cmd = app.add_subcommand("verify", "Check predicted expansions over a parameter grid");
  verify_cmd->add_option("family", cfg.selector, "alpha, lambda, beta, mu or g")->required();
  verify_cmd->add_option("--n", cfg.n, "Range a..b of n");
  verify_cmd->add_option("--N", cfg.N, "Range a..b of N");
  verify_cmd->add_option("--k", cfg.k, "Range a..b of k");
  verify_cmd->add_option("--x", cfg.x, "Range a..b of x");
  add_common(verify_cmd, cfg, true);

  auto* poly_cmd = app.add_subcommand("poly", "Dump polynomial coefficients, constant term first");
  poly_cmd->add_option("kind", cfg.selector, "family, minus1, shifted or gpoly")->required();
  poly_cmd->add_option("--k", cfg.k, "Polynomial index k");
  poly_cmd->add_option("--N", cfg.N, "Parameter N");
  poly_cmd->add_option("--n", cfg.n, "Index n (shifted)");
  poly_cmd->add_option("--count", cfg.count, "Number of polynomials");
  add_common(poly_cmd, cfg, false);

  auto* locus_cmd = app.add_subcommand("locus", "Root locus checks");
  locus_cmd->add_option("curve", cfg.selector, "h1, chebk1 or quartic-k4")->required();
  locus_cmd->add_option("--n", cfg.n, "Index n");
  locus_cmd->add_option("--N", cfg.N, "Parameter N");
  locus_cmd->add_option("--m", cfg.m, "Comma-separated m values (quartic-k4)");
  add_common(locus_cmd, cfg, false);

  auto* identity_cmd = app.add_subcommand("identity", "Check a Fibonacci/Lucas identity over a range of n");
  identity_cmd->add_option("name", cfg.selector, "fid, luc5, id1, id2, fib2a or idf2")->required();
  identity_cmd->add_option("--n", cfg.n, "Range a..b of n");
  identity_cmd->add_option("--x", cfg.x, "m for fib2a, evaluation point for idf2");
  add_common(identity_cmd, cfg, false);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("surdcf");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg.validate();
    std::ofstream file;
    if (!cfg.out_path.empty()) {
      file.open(cfg.out_path);
      if (!file) throw UsageError("cannot open '" + cfg.out_path + "' for writing");
    }
    std::ostream& sink = cfg.out_path.empty() ? out : file;

    if (expand_cmd->parsed()) return cmd_expand(cfg, sink);
    if (value_cmd->parsed()) return cmd_value(cfg, sink);
    if (verify_cmd->parsed()) return cmd_verify(cfg, sink, err);
    if (poly_cmd->parsed()) return cmd_poly(cfg, sink);
    if (locus_cmd->parsed()) return cmd_locus(cfg, sink, err);
    if (identity_cmd->parsed()) return cmd_identity(cfg, sink, err);
    throw UsageError("no subcommand");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotQuadraticIrrational& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericFailure& e) {
    err << "numeric failure: " << e.what() << '\n';
    for (const auto& z : e.best_iterate()) err << "  " << fmt_double(z.real()) << ' ' << fmt_double(z.imag()) << '\n';
    return kExitMismatch;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
}

}  // namespace surdcf::cli
