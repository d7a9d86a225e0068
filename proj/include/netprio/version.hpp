#pragma once

namespace netprio {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace netprio
