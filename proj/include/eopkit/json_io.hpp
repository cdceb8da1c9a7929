#pragma once

// JSON encoding of polynomials and verdicts. Rationals travel as decimal
// strings so no width limit applies.
//
//   {"family", "type", "m", "n", "params": {name: "p/q"}, "coeffs": [...]}
//
// Coefficients ascend in degree. A rational coefficient is ["num", "den"];
// a coefficient in Q(t) is {"num": [...], "den": [...]} with each list the
// ascending coefficients of a polynomial in t, spelled "p/q".

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eopkit/verdict.hpp"

namespace eop {

using Json = nlohmann::ordered_json;

Json coeffs_to_json(const QPoly& p);
/// Constant coefficients still use the ["num", "den"] form.
Json coeffs_to_json(const Poly<RatFunc>& p);

/// Accepts either coefficient form. Throws SpecError(Parse) on malformed input.
Poly<RatFunc> coeffs_from_json(const Json& coeffs);

struct PolyDocument {
  std::string family;
  std::optional<std::string> type;  // absent for classical polynomials
  std::optional<int> m;
  int n = 0;
  std::vector<std::pair<std::string, std::string>> params;
  Poly<RatFunc> coeffs;

  /// True when some coefficient involves t.
  bool symbolic() const;
  /// Valid only when !symbolic().
  QPoly rational_coeffs() const;

  Json to_json() const;
  static PolyDocument from_json(const Json& j);
};

Json report_to_json(const VerdictReport& report);

}  // namespace eop
