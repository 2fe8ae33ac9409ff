#pragma once

namespace rbs {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rbs
