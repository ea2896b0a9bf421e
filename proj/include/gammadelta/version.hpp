#pragma once

namespace gammadelta {

inline constexpr const char* kToolVersion = "1.0.0";

} // namespace gammadelta
