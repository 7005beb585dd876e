#include "surdcf/render.hpp"

#include <cctype>
#include <string>

#include "surdcf/errors.hpp"

namespace surdcf {
namespace {

constexpr std::string_view kRoot = "√";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad(std::string_view what, std::string_view text) {
  throw UsageError(std::string(what) + ": '" + std::string(text) + "'");
}

std::string term(const Integer& coeff, int degree, bool first) {
  std::string out;
  const Integer mag = abs(coeff);
  if (coeff < 0) {
    out += "-";
  } else if (!first) {
    out += "+";
  }
  if (degree == 0 || mag != 1) out += mag.get_str();
  if (degree >= 1) out += "x";
  if (degree >= 2) out += "^" + std::to_string(degree);
  return out;
}

}  // namespace

std::string to_string(const QuadraticSurd& s) {
  return "(" + s.p().get_str() + "+" + std::string(kRoot) + s.d().get_str() + ")/" + s.q().get_str();
}

std::string to_string(std::span<const Integer> word, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += sep;
    out += word[i].get_str();
  }
  return out;
}

std::string to_string(const PeriodicCF& cf) {
  return "[" + to_string(cf.preperiod) + "; (" + to_string(cf.period) + ")]";
}

Integer parse_integer(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.empty()) bad("empty integer", text);
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) bad("malformed integer", text);
  for (; i < t.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) bad("malformed integer", text);
  }
  const std::string s(t[0] == '+' ? t.substr(1) : t);
  return Integer(s, 10);
}

CFWord parse_word(std::string_view text) {
  CFWord out;
  const std::string_view t = trim(text);
  if (t.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = t.find(',', start);
    out.push_back(parse_integer(t.substr(start, comma == std::string_view::npos ? t.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

PeriodicCF parse_periodic_cf(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') bad("periodic CF must be [pre; (period)]", text);
  const std::string_view body = t.substr(1, t.size() - 2);
  const std::size_t semi = body.find(';');
  if (semi == std::string_view::npos) bad("periodic CF needs ';'", text);
  const std::string_view period = trim(body.substr(semi + 1));
  if (period.size() < 2 || period.front() != '(' || period.back() != ')') {
    bad("period must be parenthesized", text);
  }
  PeriodicCF cf{parse_word(body.substr(0, semi)), parse_word(period.substr(1, period.size() - 2))};
  if (cf.period.empty()) bad("empty period", text);
  return cf;
}

QuadraticSurd parse_surd(std::string_view text) {
  const std::string_view t = trim(text);
  const std::size_t root = t.find(kRoot);
  const std::size_t close = t.find(")/");
  if (t.empty() || t.front() != '(' || root == std::string_view::npos || close == std::string_view::npos ||
      root < 2 || t[root - 1] != '+' || close < root) {
    bad("surd must look like (P+√D)/Q", text);
  }
  const Integer p = parse_integer(t.substr(1, root - 2));
  const Integer d = parse_integer(t.substr(root + kRoot.size(), close - root - kRoot.size()));
  const Integer q = parse_integer(t.substr(close + 2));
  return QuadraticSurd(p, q, d);
}

std::string coefficients_csv(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  return to_string(p.coefficients(), ",");
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Integer& c = p.coefficients()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    out += term(c, i, first);
    first = false;
  }
  return out;
}

std::string quadratic_to_string(const std::array<Integer, 3>& abc) {
  return to_string(IntPolynomial({abc[2], abc[1], abc[0]}));
}

}  // namespace surdcf
