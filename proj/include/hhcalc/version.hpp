#pragma once

namespace hhcalc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hhcalc
