#pragma once

namespace gpa {
inline constexpr const char* kVersion = "1.0.0";
inline constexpr int kFormatVersion = 1;
} // namespace gpa
