#pragma once

namespace spdual {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace spdual
