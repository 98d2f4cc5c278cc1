#pragma once

namespace glvar {

inline constexpr const char* kVersion = "1.0.0";

} // namespace glvar
