#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hvec/catalog.hpp"
#include "hvec/complex.hpp"
#include "hvec/field.hpp"
#include "hvec/harness.hpp"
#include "hvec/lsop.hpp"
#include "hvec/report.hpp"

using namespace hvec;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kGenericity = 3 };

struct Input {
  std::string catalog;
  std::string path;
};

struct Common {
  Input input;
  std::uint64_t field = 2147483647;
  std::uint64_t seed = 1;
  std::string format = "markdown";
  bool strict = false;
  std::optional<int> max_degree;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::pair<std::string, SimplicialComplex> load(const Input& in) {
  if (in.catalog.empty() == in.path.empty()) throw UsageError("give exactly one of --catalog NAME or an input file");
  if (!in.catalog.empty()) {
    try {
      return {in.catalog, catalog_entry(in.catalog).complex};
    } catch (const std::out_of_range& e) {
      throw UsageError(e.what());
    }
  }
  try {
    return {in.path, load_complex_file(in.path)};
  } catch (const ParseError& e) {
    std::string msg = in.path + ": " + e.what();
    if (e.line() > 0 && msg.find("line ") == std::string::npos) msg += " (line " + std::to_string(e.line()) + ")";
    throw UsageError(msg);
  } catch (const std::exception& e) {
    throw UsageError(in.path + ": " + e.what());
  }
}

void truncate(std::vector<std::int64_t>& v, const std::optional<int>& bound) {
  if (bound && static_cast<int>(v.size()) > *bound + 1) v.resize(static_cast<std::size_t>(*bound + 1));
}

void add_common(CLI::App* app, Common& c, bool with_input) {
  if (with_input) {
    app->add_option("--catalog", c.input.catalog, "catalog complex name");
    app->add_option("input", c.input.path, "complex file (facet text or JSON)");
  }
  app->add_option("--field", c.field, "prime p, below 2^63")
      ->check([](const std::string& s) -> std::string {
        try {
          std::size_t used = 0;
          const unsigned long long p = std::stoull(s, &used);
          if (used != s.size()) return "not an integer: " + s;
          if (p >= (1ULL << 63)) return "prime must be below 2^63";
          if (!is_prime(p)) return s + " is not prime";
          return {};
        } catch (const std::exception&) {
          return "not an integer: " + s;
        }
      })
      ->capture_default_str();
  app->add_option("--seed", c.seed, "seed for the l.s.o.p.")->capture_default_str();
  app->add_option("--format", c.format, "json, markdown or csv")
      ->check(CLI::IsMember({"json", "markdown", "csv"}))
      ->capture_default_str();
  app->add_flag("--strict-prime-field", c.strict, "work over GF(p) itself instead of an extension");
}

int exit_for(const std::vector<VerificationReport>& rs) {
  return std::any_of(rs.begin(), rs.end(), [](const auto& r) { return r.verdict == Verdict::Fail; }) ? kFail : kOk;
}

std::string flag_text(Over o) {
  switch (o) {
    case Over::All:
      return "yes";
    case Over::OddOnly:
      return "p odd";
    case Over::None:
      break;
  }
  return "no";
}

std::string catalog_listing(Format f) {
  std::ostringstream out;
  if (f == Format::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : catalog())
      arr.push_back({{"name", e.name},
                     {"dimension", e.complex.dimension()},
                     {"vertices", e.complex.num_vertices()},
                     {"facets", e.complex.facets().size()},
                     {"pure", e.pure},
                     {"cohen_macaulay", flag_text(e.cohen_macaulay)},
                     {"buchsbaum", flag_text(e.buchsbaum)}});
    out << arr.dump(2) << "\n";
  } else if (f == Format::Csv) {
    out << "name,dimension,vertices,facets,pure,cohen_macaulay,buchsbaum\n";
    for (const auto& e : catalog())
      out << e.name << "," << e.complex.dimension() << "," << e.complex.num_vertices() << ","
          << e.complex.facets().size() << "," << (e.pure ? "yes" : "no") << "," << flag_text(e.cohen_macaulay) << ","
          << flag_text(e.buchsbaum) << "\n";
  } else {
    out << "| name | dim | vertices | facets | pure | Cohen-Macaulay | Buchsbaum |\n|---|---|---|---|---|---|---|\n";
    for (const auto& e : catalog())
      out << "| " << e.name << " | " << e.complex.dimension() << " | " << e.complex.num_vertices() << " | "
          << e.complex.facets().size() << " | " << (e.pure ? "yes" : "no") << " | " << flag_text(e.cohen_macaulay)
          << " | " << flag_text(e.buchsbaum) << " |\n";
  }
  return out.str();
}

std::vector<std::string> theorem_selection(const std::string& selection) {
  if (selection == "all") return theorem_ids();
  std::vector<std::string> out;
  std::stringstream ss(selection);
  for (std::string id; std::getline(ss, id, ',');) {
    if (!is_theorem_id(id)) {
      std::string known;
      for (const auto& t : theorem_ids()) known += " " + t;
      throw UsageError("unknown theorem '" + id + "'; known:" + known);
    }
    out.push_back(id);
  }
  if (out.empty()) throw UsageError("empty theorem selection");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"h-vectors of simplicial complexes and the identities relating them to link homology"};
  app.require_subcommand(1);

  Common analyze_opts;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "f, h, Betti numbers, h^a, h^s and h^tau of one complex");
  add_common(analyze_cmd, analyze_opts, true);
  analyze_cmd->add_option("--max-degree", analyze_opts.max_degree, "print the vectors only up to this degree")
      ->check(CLI::NonNegativeNumber);

  Common verify_opts;
  std::string theorem;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check identities on one complex");
  add_common(verify_cmd, verify_opts, true);
  verify_cmd->add_option("--theorem", theorem, "theorem id, a comma-separated list, or 'all'")->required();

  Common suite_opts;
  std::string config = "default";
  CLI::App* suite_cmd = app.add_subcommand("suite", "run a verification suite");
  suite_cmd->add_option("--config", config, "JSON config file or 'default'")->capture_default_str();
  suite_cmd->add_option("--format", suite_opts.format, "json, markdown or csv")
      ->check(CLI::IsMember({"json", "markdown", "csv"}))
      ->capture_default_str();

  Common catalog_opts;
  CLI::App* catalog_cmd = app.add_subcommand("catalog", "the built-in complexes");
  catalog_cmd->require_subcommand(1);
  CLI::App* list_cmd = catalog_cmd->add_subcommand("list", "names, dimensions and flags");
  list_cmd->add_option("--format", catalog_opts.format, "json, markdown or csv")
      ->check(CLI::IsMember({"json", "markdown", "csv"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze_cmd) {
      const auto [name, delta] = load(analyze_opts.input);
      if (delta.is_void()) throw UsageError("the void complex has no h-vector");
      Analysis a = analyze(delta, name, analyze_opts.field, analyze_opts.seed, analyze_opts.strict);
      for (auto* v : {&a.h_alg, &a.h_sigma, &a.h_tau}) truncate(*v, analyze_opts.max_degree);
      std::cout << format_analysis(a, parse_format(analyze_opts.format));
      return kOk;
    }
    if (*verify_cmd) {
      const std::vector<std::string> ids = theorem_selection(theorem);
      const auto [name, delta] = load(verify_opts.input);
      if (delta.is_void()) throw UsageError("the void complex has no h-vector");
      std::vector<VerificationReport> rs;
      for (const auto& id : ids)
        rs.push_back(verify(id, delta, name, verify_opts.field, verify_opts.seed, {verify_opts.strict}));
      std::cout << format_reports(rs, parse_format(verify_opts.format));
      return exit_for(rs);
    }
    if (*suite_cmd) {
      SuiteConfig cfg;
      if (config == "default") {
        cfg = default_suite();
      } else {
        std::ifstream in(config);
        if (!in) throw UsageError("cannot open " + config);
        std::stringstream text;
        text << in.rdbuf();
        const auto parent = std::filesystem::path(config).parent_path();
        cfg = parse_suite_config(text.str(), parent.empty() ? "." : parent.string());
      }
      const auto rs = run_suite(cfg);
      std::cout << format_reports(rs, parse_format(suite_opts.format));
      return exit_for(rs);
    }
    if (*list_cmd) {
      std::cout << catalog_listing(parse_format(catalog_opts.format));
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kUsage;
  } catch (const GenericityError& e) {
    std::cerr << "genericity failure: " << e.what() << "\n";
    return kGenericity;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
