#pragma once

namespace lagcell {
inline constexpr const char* kToolName = "lagcell";
inline constexpr const char* kToolVersion = "1.0.0";
}  // namespace lagcell
