#pragma once

namespace dadqc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace dadqc
