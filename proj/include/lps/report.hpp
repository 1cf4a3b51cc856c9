#pragma once

#include <string>

#include "json.hpp"
#include "lps/core.hpp"

namespace lps {

using Json = nlohmann::json;

inline constexpr const char* kReportSchemaVersion = "1.0";

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

// Write-then-rename so readers never observe a partial report.
void write_text_atomic(const std::string& path, const std::string& text);
void write_json_atomic(const std::string& path, const Json& j);

}  // namespace lps
