#pragma once

#include <array>
#include <string>
#include <string_view>

#include "surdcf/convergents.hpp"
#include "surdcf/polynomial.hpp"
#include "surdcf/surd.hpp"

namespace surdcf {

// Text forms used by the CLI:
//   surd         "(P+√D)/Q"            e.g. "(9+√105)/3", "(-1+√2)/1"
//   periodic CF  "[pre...; (period...)]" e.g. "[19; (4, 20)]", "[; (1)]"
//   word         "a,b,c"
// parse_* accepts exactly what to_string emits (spaces optional) and throws
// UsageError otherwise.

std::string to_string(const QuadraticSurd& s);
std::string to_string(const PeriodicCF& cf);
std::string to_string(std::span<const Integer> word, std::string_view sep = ", ");

QuadraticSurd parse_surd(std::string_view text);
PeriodicCF parse_periodic_cf(std::string_view text);
CFWord parse_word(std::string_view text);
Integer parse_integer(std::string_view text);

/// Coefficients constant term first, comma separated ("8,0,9").
std::string coefficients_csv(const IntPolynomial& p);

/// Human form, highest degree first ("9x^2+8").
std::string to_string(const IntPolynomial& p);

/// a x^2 + b x + c as "x^2-18x-24".
std::string quadratic_to_string(const std::array<Integer, 3>& abc);

}  // namespace surdcf
