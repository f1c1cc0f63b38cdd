#pragma once

namespace perfectrank {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace perfectrank
