#include "eopkit/render.hpp"

namespace eop {

namespace {

std::string latex_power(std::string_view var, int k) {
  std::string out(var);
  if (k > 1) out += k < 10 ? "^" + std::to_string(k) : "^{" + std::to_string(k) + "}";
  return out;
}

std::string latex_rat(const Rat& mag) {
  if (mag.is_integer()) return mag.numerator_string();
  return "\\frac{" + mag.numerator_string() + "}{" + mag.denominator_string() + "}";
}

// Descending sum over Q in `var`, LaTeX spelling.
std::string latex_sum(const QPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Rat c = p.coeff(k);
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rat mag = negative ? -c : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (k == 0) {
      out += latex_rat(mag);
      continue;
    }
    if (mag != Rat(1)) out += latex_rat(mag);
    out += latex_power(var, k);
  }
  return out;
}

// Nonzero symbolic coefficient as a standalone factor.
std::string latex_factor(const RatFunc& c, std::string_view param) {
  std::string num = latex_sum(c.numerator(), param);
  if (c.denominator().degree() > 0) return "\\frac{" + num + "}{" + latex_sum(c.denominator(), param) + "}";
  return "(" + num + ")";
}

std::string roman(EopType type) { return std::string(type_name(type)); }

}  // namespace

std::string render_human(const QPoly& p) { return to_string(p); }

std::string render_human(const Poly<RatFunc>& p, std::string_view param) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const RatFunc& c = p.coefficients()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string body;
    bool negative = false;
    if (c.is_constant()) {
      Rat v = c.constant_value();
      negative = v.sign() < 0;
      if (negative) v = -v;
      if (k == 0 || v != Rat(1)) body = v.to_string();
    } else {
      negative = c.numerator().leading().sign() < 0;
      body = (negative ? -c : c).to_string(param);
      if (body.front() != '(') body = "(" + body + ")";
    }
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += body;
    if (k > 0) {
      if (!body.empty()) out += " ";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::string render_latex(const QPoly& p) { return latex_sum(p, "x"); }

std::string render_latex(const Poly<RatFunc>& p, std::string_view param) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const RatFunc& c = p.coefficients()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string body;
    bool negative = false;
    if (c.is_constant()) {
      Rat v = c.constant_value();
      negative = v.sign() < 0;
      if (negative) v = -v;
      if (k == 0 || v != Rat(1)) body = latex_rat(v);
    } else {
      negative = c.numerator().leading().sign() < 0;
      body = latex_factor(negative ? -c : c, param);
    }
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += body;
    if (k > 0) out += latex_power("x", k);
  }
  return out;
}

std::string latex_label(Family family, std::optional<EopType> type, int m, int n) {
  const std::string sub = "_{" + std::to_string(n) + "}";
  if (!type) {
    switch (family) {
      case Family::Hermite: return "H" + sub + "(x)";
      case Family::Laguerre: return "L^{(\\alpha)}" + sub + "(x)";
      case Family::Jacobi: return "P^{(\\alpha,\\beta)}" + sub + "(x)";
    }
  }
  const std::string sup = "^{({\\rm " + roman(*type) + "}," + std::to_string(m) + ")}";
  switch (family) {
    case Family::Hermite: return "\\hat{H}" + sup + sub + "(x)";
    case Family::Laguerre: return "\\hat{L}" + sup + sub + "(x;\\alpha)";
    case Family::Jacobi: return "\\hat{P}" + sup + sub + "(x;\\alpha,\\beta)";
  }
  return "";
}

}  // namespace eop
