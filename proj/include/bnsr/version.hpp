#pragma once

namespace bnsr {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace bnsr
