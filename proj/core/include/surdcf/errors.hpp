#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace surdcf {

// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (negative isqrt
// input, nonpositive scale factor, zero denominator).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Caller misuse: empty word, unknown identity name, index out of range.
class UsageError : public Error {
 public:
  using Error::Error;
};

// The input does not describe a quadratic irrational (square or nonpositive
// discriminant, rational fixed point).
class NotQuadraticIrrational : public Error {
 public:
  using Error::Error;
};

// Continued-fraction expansion hit max_steps before a state repeated.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string what, std::size_t steps)
      : Error(std::move(what)), steps_(steps) {}
  std::size_t steps() const noexcept { return steps_; }

 private:
  std::size_t steps_;
};

// A theorem formula produced something that is not a valid partial quotient
// (for instance a non-integral 2/5 multiple).
class TheoremEncodingError : public Error {
 public:
  using Error::Error;
};

// Root refinement did not converge; carries the best iterate.
class NumericFailure : public Error {
 public:
  NumericFailure(std::string what, std::vector<std::complex<double>> best)
      : Error(std::move(what)), best_(std::move(best)) {}
  const std::vector<std::complex<double>>& best_iterate() const noexcept {
    return best_;
  }

 private:
  std::vector<std::complex<double>> best_;
};

}  // namespace surdcf
