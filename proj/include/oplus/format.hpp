#pragma once

#include <string>
#include <string_view>

#include "oplus/exact.hpp"
#include "oplus/grouplaw.hpp"
#include "oplus/quadext.hpp"

namespace oplus {

/// "p/q", the "/q" omitted when q = 1.
std::string to_string(const Rational& r);

/// "30 - 3*sqrt(89)", "3/2", "sqrt(2)", ... Collapses to the rational
/// rendering when the radical part is zero.
std::string to_string(const QuadExt& z);

/// Canonical polynomial rendering: "x + y + 3", "24*x*y - 39*x - 39*y + 65",
/// "(30 + 3*sqrt(89))*x*y + ...". Zero terms are dropped.
std::string polynomial_string(const RationalLaw& law);
std::string polynomial_string(const QuadLaw& law);

/// Inverse of to_string(QuadExt) for elements of Q(sqrt(d)); accepts plain
/// rationals (radical part zero). Throws std::invalid_argument.
QuadExt parse_quadext(std::string_view text, const Int& d);

}  // namespace oplus
