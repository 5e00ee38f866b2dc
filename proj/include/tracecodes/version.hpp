#pragma once

namespace tracecodes {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace tracecodes
