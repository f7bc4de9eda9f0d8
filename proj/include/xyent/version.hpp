#pragma once

namespace xyent {

constexpr const char* kVersion = "0.1.0";

}  // namespace xyent
