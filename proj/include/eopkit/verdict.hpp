#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eopkit/ratfunc.hpp"

namespace eop {

enum class VerdictStatus {
  Pass,
  Fail,
  /// A coefficient did not have a finite limit.
  Divergent,
  /// The claimed multiplier vanishes at these parameters; no comparison made.
  ZeroPrefactor,
};

std::string_view status_name(VerdictStatus status);

/// Outcome of one exact check. Both sides are kept, over Q(t) so rational and
/// symbolic runs share one shape; rational results are constant coefficients.
struct VerdictReport {
  std::string claim_id;
  VerdictStatus status = VerdictStatus::Fail;
  Poly<RatFunc> left;
  Poly<RatFunc> right;
  /// Parameter bindings and notes, in insertion order.
  std::vector<std::pair<std::string, std::string>> context;
  std::vector<VerdictReport> sub_claims;

  bool passed() const { return status == VerdictStatus::Pass; }

  /// Count of this claim plus all nested sub-claims.
  std::size_t claim_count() const;
};

inline Poly<RatFunc> as_report_poly(const Poly<RatFunc>& p) { return p; }
inline Poly<RatFunc> as_report_poly(const QPoly& p) { return lift(p); }

/// Builds a report comparing two polynomials; sub-claims must all pass too.
template <class P>
VerdictReport compare(std::string claim_id, const P& left, const P& right,
                      std::vector<std::pair<std::string, std::string>> context = {},
                      std::vector<VerdictReport> sub_claims = {}) {
  VerdictReport r;
  r.claim_id = std::move(claim_id);
  r.left = as_report_poly(left);
  r.right = as_report_poly(right);
  r.context = std::move(context);
  r.sub_claims = std::move(sub_claims);
  bool subs_ok = true;
  for (const auto& s : r.sub_claims) subs_ok = subs_ok && s.passed();
  r.status = (left == right && subs_ok) ? VerdictStatus::Pass : VerdictStatus::Fail;
  return r;
}

}  // namespace eop
