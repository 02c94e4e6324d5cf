#pragma once

namespace lcx {
inline constexpr const char* kVersion = "1.0.0";
}
