#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hvec/harness.hpp"
#include "json.hpp"

namespace hvec {

enum class Format { Json, Markdown, Csv };
/// "json", "markdown" or "csv"; throws std::invalid_argument otherwise.
Format parse_format(const std::string& s);

struct Summary {
  std::size_t total = 0, pass = 0, fail = 0, observed = 0, skip = 0;
};
Summary summarize(const std::vector<VerificationReport>& reports);

nlohmann::json to_json(const VerificationReport& r);
/// Inverse of to_json; throws nlohmann::json exceptions on schema mismatch.
VerificationReport report_from_json(const nlohmann::json& j);
/// {"summary": {...}, "results": [...]}
nlohmann::json to_json(const std::vector<VerificationReport>& reports);

std::string format_reports(const std::vector<VerificationReport>& reports, Format f);

nlohmann::json to_json(const Analysis& a);
std::string format_analysis(const Analysis& a, Format f);

}  // namespace hvec
