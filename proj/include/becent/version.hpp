#pragma once

namespace becent {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace becent
