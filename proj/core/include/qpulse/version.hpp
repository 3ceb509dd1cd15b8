#pragma once

namespace qpulse {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qpulse
