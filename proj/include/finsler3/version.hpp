#pragma once

namespace finsler3 {

inline constexpr const char* kToolName = "finsler3";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

}  // namespace finsler3
