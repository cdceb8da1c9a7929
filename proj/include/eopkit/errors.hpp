#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eop {

/// Which validity rule a rejected request violated.
enum class Rule {
  GapDegree,
  OddHermiteCodimension,
  Pole,
  DegenerateParameters,
  InvalidIndex,
  UnsupportedSymbolic,
  Parse,
};

std::string_view rule_name(Rule rule);

/// Raised when a request names a polynomial or claim that does not exist:
/// gap degrees, odd Hermite codimension, prefactor poles, malformed input.
class SpecError : public std::invalid_argument {
 public:
  SpecError(Rule rule, const std::string& detail)
      : std::invalid_argument(std::string(rule_name(rule)) + ": " + detail), rule_(rule) {}

  Rule rule() const noexcept { return rule_; }

 private:
  Rule rule_;
};

/// A coefficient whose numerator degree exceeds its denominator degree.
class DivergentLimit : public std::domain_error {
 public:
  DivergentLimit(int coefficient_degree, int excess)
      : std::domain_error("divergent limit at x^" + std::to_string(coefficient_degree) +
                          " (degree excess " + std::to_string(excess) + ")"),
        coefficient_degree_(coefficient_degree),
        excess_(excess) {}

  int coefficient_degree() const noexcept { return coefficient_degree_; }
  int excess() const noexcept { return excess_; }

 private:
  int coefficient_degree_;
  int excess_;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

}  // namespace eop
