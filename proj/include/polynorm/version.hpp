#pragma once

namespace polynorm {

inline constexpr const char* tool_version = "1.0.0";

}  // namespace polynorm
