#pragma once

namespace spinorth {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace spinorth
