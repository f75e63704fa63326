#pragma once

namespace rfci {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rfci
