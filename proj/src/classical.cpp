#include "eopkit/appendix_a.hpp"
#include "eopkit/classical.hpp"
#include "eopkit/verdict.hpp"

namespace eop {

std::string_view family_name(Family family) {
  switch (family) {
    case Family::Hermite: return "hermite";
    case Family::Laguerre: return "laguerre";
    case Family::Jacobi: return "jacobi";
  }
  return "unknown";
}

std::string_view status_name(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Pass: return "pass";
    case VerdictStatus::Fail: return "fail";
    case VerdictStatus::Divergent: return "divergent";
    case VerdictStatus::ZeroPrefactor: return "zero-prefactor";
  }
  return "unknown";
}

std::size_t VerdictReport::claim_count() const {
  std::size_t n = 1;
  for (const auto& s : sub_claims) n += s.claim_count();
  return n;
}

std::string appendix_a_id(AppendixA id) { return "A" + std::to_string(static_cast<int>(id)); }

std::optional<AppendixA> parse_appendix_a(std::string_view text) {
  for (AppendixA id : kAllAppendixA)
    if (appendix_a_id(id) == text) return id;
  return std::nullopt;
}

Family appendix_a_family(AppendixA id) {
  const int k = static_cast<int>(id);
  if (k <= 2) return Family::Hermite;
  if (k <= 7) return Family::Laguerre;
  return Family::Jacobi;
}

}  // namespace eop
