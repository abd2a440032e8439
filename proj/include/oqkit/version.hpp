#pragma once

namespace oqkit {

inline constexpr const char* kToolName = "oqkit";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace oqkit
