#pragma once

#include <string>

namespace qpulse::cli {

// Radians from a flag value: plain decimals plus exact pi literals of the
// form "[coeff]pi[/divisor]" — "pi", "2pi", "pi/2", "3pi/4". Exact literals
// keep pi-valued fixtures free of 3.14159-style drift in output metadata.
// Throws std::invalid_argument on anything else.
double parse_angle(const std::string& text);

}  // namespace qpulse::cli
