#pragma once

namespace bathnet {

inline constexpr const char* kVersion = "0.1.0";

}
