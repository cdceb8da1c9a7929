#pragma once

// The reference corpus: seven low-order exceptional polynomials and five limit
// checks, each regenerated by the library and compared with the closed forms
// in golden.hpp.

#include <cstdint>
#include <string>
#include <vector>

#include "eopkit/verdict.hpp"

namespace eop {

struct ReferenceRow {
  enum class Kind { Polynomial, Limit };
  Kind kind;
  std::string label;  // e.g. "L^(I,1)_2" or "limit-jl:I"
  /// Exact expansion where it has at most one parameter, else empty.
  std::string human;
  std::string latex;
  /// Every comparison behind the row; the row matches when all pass.
  std::vector<VerdictReport> checks;

  bool matches() const;
};

/// Parameterized rows are checked symbolically where one parameter suffices
/// and at `points` sampled rationals (pairs for Jacobi) drawn from `seed`.
std::vector<ReferenceRow> reference_table(std::uint64_t seed = 1, int points = 5);

}  // namespace eop
