#pragma once

namespace dkglab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace dkglab
