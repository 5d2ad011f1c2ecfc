#pragma once

namespace ercd {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ercd
