#pragma once

#include <stdexcept>
#include <string>

namespace fgplab {

/// Bad inputs: malformed configs, invalid market specs, dimension mismatches.
/// The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Runtime numerical failures (bankruptcy, fit divergence, degenerate
/// numeraire). The CLI maps this to exit code 3.
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Portfolio value hit zero or below while compounding.
class BankruptcyError : public NumericError {
public:
  BankruptcyError(const std::string& label, std::size_t step)
      : NumericError("portfolio '" + label + "' bankrupt at step " +
                     std::to_string(step)),
        step_(step) {}
  std::size_t step() const { return step_; }

private:
  std::size_t step_;
};

/// Numeraire wealth became nonpositive or its variance degenerated.
class DegenerateNumeraireError : public NumericError {
public:
  explicit DegenerateNumeraireError(const std::string& msg)
      : NumericError(msg) {}
};

/// Generating-function derivative evaluation produced a nonfinite value.
class EvaluationError : public NumericError {
public:
  EvaluationError(const std::string& msg, std::size_t step)
      : NumericError(msg + " at step " + std::to_string(step)), step_(step) {}
  std::size_t step() const { return step_; }

private:
  std::size_t step_;
};

}  // namespace fgplab
