#pragma once

namespace modjoin {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace modjoin
