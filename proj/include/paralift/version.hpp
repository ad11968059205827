#pragma once

namespace paralift {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace paralift
