#pragma once

namespace lmgrdm {
inline constexpr const char* kToolName = "lmgrdm";
inline constexpr const char* kVersion = "0.1.0";
}  // namespace lmgrdm
