#include "eopkit/exceptional.hpp"

namespace eop {

std::string_view type_name(EopType type) {
  switch (type) {
    case EopType::I: return "I";
    case EopType::II: return "II";
    case EopType::III: return "III";
  }
  return "?";
}

std::optional<EopType> parse_type(std::string_view text) {
  if (text == "I" || text == "1") return EopType::I;
  if (text == "II" || text == "2") return EopType::II;
  if (text == "III" || text == "3") return EopType::III;
  return std::nullopt;
}

namespace detail {

void require_nonnegative(int m, int n) {
  if (m < 0 || n < 0)
    throw SpecError(Rule::InvalidIndex,
                    "m and n must be nonnegative, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
}

void require_type3_index(int m, int n) {
  require_nonnegative(m, n);
  if (n >= 1 && n <= m)
    throw SpecError(Rule::GapDegree, "n=" + std::to_string(n) + " is a missing degree (1.." +
                                         std::to_string(m) + ") for type III with m=" + std::to_string(m));
}

}  // namespace detail

EopSpec EopSpec::make(Family family, EopType type, int m, int n) {
  detail::require_nonnegative(m, n);
  if (family == Family::Hermite) {
    if (type != EopType::III)
      throw SpecError(Rule::InvalidIndex, "Hermite EOPs exist only as type III");
    if (m % 2 != 0)
      throw SpecError(Rule::OddHermiteCodimension, "Hermite EOPs need even m, got m=" + std::to_string(m));
  }
  if (type == EopType::III) detail::require_type3_index(m, n);
  return EopSpec(family, type, m, n);
}

std::string EopSpec::label() const {
  std::string base;
  switch (family_) {
    case Family::Hermite: base = "H"; break;
    case Family::Laguerre: base = "L"; break;
    case Family::Jacobi: base = "P"; break;
  }
  return base + "^(" + std::string(type_name(type_)) + "," + std::to_string(m_) + ")_" + std::to_string(n_);
}

int eop_degree(const EopSpec& spec) { return spec.degree(); }

}  // namespace eop
