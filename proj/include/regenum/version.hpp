#pragma once

namespace regenum {

inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace regenum
