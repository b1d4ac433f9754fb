#include "hvec/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace hvec {

namespace {

Verdict verdict_from(const std::string& s) {
  for (Verdict v : {Verdict::Pass, Verdict::Fail, Verdict::Observed, Verdict::Skip})
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

std::string seq(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) out += c == '|' ? std::string("\\|") : std::string(1, c);
  return out;
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "markdown") return Format::Markdown;
  if (s == "csv") return Format::Csv;
  throw std::invalid_argument("unknown output format '" + s + "'");
}

Summary summarize(const std::vector<VerificationReport>& reports) {
  Summary s;
  for (const auto& r : reports) {
    ++s.total;
    switch (r.verdict) {
      case Verdict::Pass:
        ++s.pass;
        break;
      case Verdict::Fail:
        ++s.fail;
        break;
      case Verdict::Observed:
        ++s.observed;
        break;
      case Verdict::Skip:
        ++s.skip;
        break;
    }
  }
  return s;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json details = nlohmann::json::object();
  for (const auto& [k, v] : r.details) details[k] = v;
  return {{"theorem", r.theorem},
          {"complex", r.complex},
          {"field", r.field},
          {"seed", r.seed},
          {"hypothesis", {{"status", r.hypothesis ? "PASS" : "SKIP"}, {"reason", r.hypothesis_reason}}},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"details", details},
          {"verdict", to_string(r.verdict)},
          {"wall_time_ms", r.wall_time_ms}};
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.theorem = j.at("theorem").get<std::string>();
  r.complex = j.at("complex").get<std::string>();
  r.field = j.at("field").get<std::uint64_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  const std::string status = j.at("hypothesis").at("status").get<std::string>();
  if (status != "PASS" && status != "SKIP") throw std::invalid_argument("unknown hypothesis status '" + status + "'");
  r.hypothesis = status == "PASS";
  r.hypothesis_reason = j.at("hypothesis").at("reason").get<std::string>();
  r.lhs = j.at("lhs").get<std::vector<std::int64_t>>();
  r.rhs = j.at("rhs").get<std::vector<std::int64_t>>();
  for (const auto& [k, v] : j.at("details").items()) r.details.emplace_back(k, v.get<std::vector<std::int64_t>>());
  r.verdict = verdict_from(j.at("verdict").get<std::string>());
  r.wall_time_ms = j.at("wall_time_ms").get<double>();
  return r;
}

nlohmann::json to_json(const std::vector<VerificationReport>& reports) {
  const Summary s = summarize(reports);
  nlohmann::json results = nlohmann::json::array();
  for (const auto& r : reports) results.push_back(to_json(r));
  return {{"summary",
           {{"total", s.total}, {"pass", s.pass}, {"fail", s.fail}, {"observed", s.observed}, {"skip", s.skip}}},
          {"results", results}};
}

std::string format_reports(const std::vector<VerificationReport>& reports, Format f) {
  std::ostringstream out;
  const Summary s = summarize(reports);
  switch (f) {
    case Format::Json:
      out << to_json(reports).dump(2) << "\n";
      break;
    case Format::Markdown:
      out << "| theorem | complex | field | seed | hypothesis | lhs | rhs | verdict | ms |\n"
          << "|---|---|---|---|---|---|---|---|---|\n";
      for (const auto& r : reports)
        out << "| " << r.theorem << " | " << md_cell(r.complex) << " | " << r.field << " | " << r.seed << " | "
            << (r.hypothesis ? "PASS" : "SKIP") << (r.hypothesis_reason.empty() ? "" : ": " + md_cell(r.hypothesis_reason))
            << " | " << seq(r.lhs) << " | " << seq(r.rhs) << " | " << to_string(r.verdict) << " | " << std::fixed
            << std::setprecision(1) << r.wall_time_ms << " |\n";
      out << "\n" << s.total << " checks: " << s.pass << " PASS, " << s.fail << " FAIL, " << s.observed
          << " OBSERVED, " << s.skip << " SKIP\n";
      break;
    case Format::Csv:
      out << "theorem,complex,field,seed,hypothesis,reason,lhs,rhs,verdict,wall_time_ms\n";
      for (const auto& r : reports)
        out << r.theorem << "," << csv_field(r.complex) << "," << r.field << "," << r.seed << ","
            << (r.hypothesis ? "PASS" : "SKIP") << "," << csv_field(r.hypothesis_reason) << ","
            << csv_field(seq(r.lhs)) << "," << csv_field(seq(r.rhs)) << "," << to_string(r.verdict) << ","
            << std::fixed << std::setprecision(3) << r.wall_time_ms << "\n";
      break;
  }
  return out.str();
}

nlohmann::json to_json(const Analysis& a) {
  return {{"complex", a.complex},
          {"field", a.field},
          {"field_name", a.field_name},
          {"seed", a.seed},
          {"lsop_attempts", a.attempts},
          {"f", a.f},
          {"h", a.h},
          {"betti", a.betti},
          {"h_alg", a.h_alg},
          {"h_sigma", a.h_sigma},
          {"h_tau", a.h_tau},
          {"h_tau_experimental", true},
          {"pure", a.pure},
          {"buchsbaum", a.buchsbaum},
          {"cohen_macaulay", a.cohen_macaulay}};
}

std::string format_analysis(const Analysis& a, Format f) {
  std::ostringstream out;
  const auto yes = [](bool b) { return b ? "yes" : "no"; };
  switch (f) {
    case Format::Json:
      out << to_json(a).dump(2) << "\n";
      break;
    case Format::Markdown:
      out << "## " << md_cell(a.complex) << "\n\n"
          << "| quantity | value |\n|---|---|\n"
          << "| field | " << a.field_name << " |\n"
          << "| seed | " << a.seed << " |\n"
          << "| f | " << seq(a.f) << " |\n"
          << "| h | " << seq(a.h) << " |\n"
          << "| reduced Betti (from -1) | " << seq(a.betti) << " |\n"
          << "| h^a | " << seq(a.h_alg) << " |\n"
          << "| h^s | " << seq(a.h_sigma) << " |\n"
          << "| h^tau (experimental) | " << seq(a.h_tau) << " |\n"
          << "| pure | " << yes(a.pure) << " |\n"
          << "| Buchsbaum | " << yes(a.buchsbaum) << " |\n"
          << "| Cohen-Macaulay | " << yes(a.cohen_macaulay) << " |\n";
      break;
    case Format::Csv:
      out << "quantity,value\n"
          << "complex," << csv_field(a.complex) << "\n"
          << "field," << a.field_name << "\n"
          << "seed," << a.seed << "\n"
          << "f," << csv_field(seq(a.f)) << "\n"
          << "h," << csv_field(seq(a.h)) << "\n"
          << "betti," << csv_field(seq(a.betti)) << "\n"
          << "h_alg," << csv_field(seq(a.h_alg)) << "\n"
          << "h_sigma," << csv_field(seq(a.h_sigma)) << "\n"
          << "h_tau_experimental," << csv_field(seq(a.h_tau)) << "\n"
          << "pure," << yes(a.pure) << "\n"
          << "buchsbaum," << yes(a.buchsbaum) << "\n"
          << "cohen_macaulay," << yes(a.cohen_macaulay) << "\n";
      break;
  }
  return out.str();
}

}  // namespace hvec
