#pragma once

#include "allee/multipoly.hpp"

#include <string_view>

namespace allee {

/// Reads expressions such as "216*a^3 - 1/4*b^4 + (y - z)^2". Accepts
/// integers, variable names, + - * / ^ and parentheses; division only by
/// rational constants. Throws std::invalid_argument on malformed input.
MultiPoly parse_poly(std::string_view text);

}  // namespace allee
