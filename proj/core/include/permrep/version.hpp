#pragma once

namespace permrep {

inline constexpr const char* kEngineVersion = "1.0.0";

}  // namespace permrep
