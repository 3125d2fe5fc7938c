#pragma once

namespace tightcx {

inline constexpr const char* kToolName = "tightcx";
inline constexpr const char* kToolVersion = "1.0.0";

} // namespace tightcx
