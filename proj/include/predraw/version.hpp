#pragma once

namespace predraw {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace predraw
