#pragma once

// Text renderings of polynomials: plain descending form and LaTeX.

#include <optional>
#include <string>
#include <string_view>

#include "eopkit/exceptional.hpp"
#include "eopkit/ratfunc.hpp"

namespace eop {

/// "x^3 + 3/2 x".
std::string render_human(const QPoly& p);

/// Symbolic coefficients rendered in `param`, parenthesized when not a
/// single rational: "x^2 - (alpha + 4) x + 1".
std::string render_human(const Poly<RatFunc>& p, std::string_view param);

/// "x^3 + \frac{3}{2}x".
std::string render_latex(const QPoly& p);

/// `param` is a LaTeX macro such as "\alpha".
std::string render_latex(const Poly<RatFunc>& p, std::string_view param);

/// "\hat{L}^{({\rm I},1)}_2(x;\alpha)" or, without a type, "L^{(\alpha)}_2(x)".
std::string latex_label(Family family, std::optional<EopType> type, int m, int n);

}  // namespace eop
