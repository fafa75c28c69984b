#pragma once

#include "dra/weyl_clifford.hpp"

#include <string_view>

namespace dra {

/// Parses expressions like "x1*d1*g2 + (1/2)*g1 - c*x2^2".
/// Tokens: x<i>, d<i>, g<i>, the field generator c, integer and a/b
/// rational literals, + - * ^ and parentheses. Throws std::invalid_argument
/// on malformed input.
WCElement parse_wc(std::string_view text, const Algebra& algebra);

} // namespace dra
