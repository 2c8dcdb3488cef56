#pragma once

#include <string>
#include <string_view>

#include "asymvar/bipoly.hpp"

namespace asymvar {

/// Parses an expression in two variables with rational literals (a or a/b),
/// + - * ^ and parentheses. Exponents are nonnegative integer literals.
/// Implicit multiplication is rejected.
BiPoly parse_polynomial(std::string_view text, const std::string& x = "X", const std::string& y = "Y");

}  // namespace asymvar
