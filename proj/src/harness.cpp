#include "hvec/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <memory>
#include <sstream>
#include <thread>

#include "hvec/catalog.hpp"
#include "hvec/cohomology.hpp"
#include "hvec/grabe.hpp"
#include "hvec/lsop.hpp"
#include "hvec/sigma.hpp"
#include "json.hpp"

namespace hvec {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Observed:
      return "OBSERVED";
    case Verdict::Skip:
      return "SKIP";
  }
  return "?";
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {"stanley", "schenzel",  "mny",      "top-entry", "hilbert-decomposition",
                                               "kernel-dim", "thm-3.6", "thm-3.7", "suspension", "ds",
                                               "symmetry", "tau-top",   "tau-conjecture"};
  return ids;
}

bool is_theorem_id(const std::string& id) {
  const auto& ids = theorem_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

Field working_field(std::uint64_t p, bool strict) {
  return strict ? Field::prime(p) : Field::for_characteristic(p);
}

namespace {

using Vec = std::vector<std::int64_t>;

// Everything one (Δ, p, seed) triple needs, built on first use.
class Context {
 public:
  Context(const SimplicialComplex& delta, std::uint64_t p, std::uint64_t seed, bool strict)
      : delta_(delta), field_(working_field(p, strict)), seed_(seed) {
    if (delta_.is_void()) throw std::invalid_argument("cannot verify on the void complex");
  }

  const SimplicialComplex& complex() const { return delta_; }
  const Field& field() const { return field_; }
  std::uint64_t seed() const { return seed_; }
  int d() const { return delta_.d(); }

  const AlgebraEngine& engine() {
    if (!engine_) engine_ = std::make_unique<AlgebraEngine>(delta_, generate_lsop(delta_, seed_, field_));
    return *engine_;
  }
  const Topology& topology() {
    if (!topology_) topology_ = std::make_unique<Topology>(delta_, field_);
    return *topology_;
  }
  const Vec& sigma() {
    if (sigma_.empty()) sigma_ = h_sigma(engine());
    return sigma_;
  }
  const Vec& tau() {
    if (tau_.empty()) tau_ = h_tau(engine());
    return tau_;
  }
  bool buchsbaum() {
    if (buchsbaum_ < 0) buchsbaum_ = is_buchsbaum(delta_, field_) ? 1 : 0;
    return buchsbaum_ == 1;
  }
  bool cohen_macaulay() {
    if (cm_ < 0) cm_ = is_cohen_macaulay(delta_, field_) ? 1 : 0;
    return cm_ == 1;
  }

 private:
  SimplicialComplex delta_;
  Field field_;
  std::uint64_t seed_;
  std::unique_ptr<AlgebraEngine> engine_;
  std::unique_ptr<Topology> topology_;
  Vec sigma_;
  Vec tau_;
  int buchsbaum_ = -1;
  int cm_ = -1;
};

void skip(VerificationReport& r, std::string reason) {
  r.hypothesis = false;
  r.hypothesis_reason = std::move(reason);
  r.verdict = Verdict::Skip;
}

void compare(VerificationReport& r) { r.verdict = r.lhs == r.rhs ? Verdict::Pass : Verdict::Fail; }

Vec range(int from, int to, const std::function<std::int64_t(int)>& fn) {
  Vec v;
  for (int i = from; i <= to; ++i) v.push_back(fn(i));
  return v;
}

void run_theorem(const std::string& id, Context& c, VerificationReport& r) {
  const int d = c.d();
  if (id == "stanley") {
    if (!c.cohen_macaulay()) return skip(r, "not Cohen-Macaulay over " + c.field().name());
    r.hypothesis_reason = "Cohen-Macaulay";
    r.lhs = c.engine().h_alg();
    r.rhs = range(0, d, [&](int i) { return predict_stanley(c.complex(), i); });
    return compare(r);
  }
  if (id == "schenzel" || id == "mny") {
    if (!c.buchsbaum()) return skip(r, "not Buchsbaum over " + c.field().name());
    r.hypothesis_reason = "Buchsbaum";
    const Topology& t = c.topology();
    if (id == "schenzel") {
      r.lhs = c.engine().h_alg();
      r.rhs = range(0, d, [&](int i) { return predict_schenzel(t, i); });
    } else {
      r.lhs = c.sigma();
      r.rhs = range(0, d, [&](int i) { return predict_mny(t, i); });
    }
    return compare(r);
  }
  if (id == "top-entry") {
    r.lhs = {c.engine().h_alg(d)};
    r.rhs = {c.topology().betti().at(d - 1)};
    return compare(r);
  }
  if (id == "hilbert-decomposition") {
    const HilbertDecompositionReport h = hilbert_decomposition_check(c.engine());
    r.lhs = h.lhs;
    r.rhs = h.rhs;
    return compare(r);
  }
  if (d < 1 && (id == "kernel-dim" || id == "thm-3.6" || id == "thm-3.7" || id == "tau-top" || id == "symmetry"))
    return skip(r, "needs d >= 1");
  if (id == "kernel-dim") {
    const AlgebraEngine& e = c.engine();
    r.lhs = range(1, d, [&](int j) { return static_cast<std::int64_t>(e.kernel_K0(j, j - 2).dim()); });
    r.rhs = range(1, d, [&](int j) { return predict_kernel_K0(c.topology(), e.system(), j); });
    return compare(r);
  }
  if (id == "thm-3.6") {
    r.lhs = {c.engine().h_alg(d - 1)};
    r.rhs = {predict_h_alg_dminus1(c.topology(), c.engine().system())};
    return compare(r);
  }
  if (id == "thm-3.7") {
    r.lhs = {c.sigma()[static_cast<std::size_t>(d - 1)]};
    r.rhs = {predict_h_sigma_dminus1(c.topology())};
    return compare(r);
  }
  if (id == "suspension") {
    if (!c.buchsbaum()) return skip(r, "not Buchsbaum over " + c.field().name());
    r.hypothesis_reason = "Buchsbaum; checked on the suspension";
    const SuspensionReport s = suspension_corollary_check(c.complex(), c.field(), c.seed());
    r.lhs = s.h_alg;
    r.rhs = s.predicted;
    r.details = {{"corollary", s.corollary}, {"base_h_alg", s.base_h_alg}};
    if (!s.torsion.empty()) {
      r.details.emplace_back("torsion", s.torsion);
      r.details.emplace_back("torsion_pattern", s.torsion_pattern);
    }
    r.verdict = s.theorem_ok() && s.corollary_ok() && s.torsion_ok() ? Verdict::Pass : Verdict::Fail;
    return;
  }
  if (id == "ds") {
    if (!c.complex().is_pure()) return skip(r, "not pure");
    r.hypothesis_reason = "pure";
    const DsReport ds = ds_relation_check(c.topology());
    r.lhs = ds.lhs;
    r.rhs = ds.rhs;
    return compare(r);
  }
  if (id == "symmetry") {
    const SymmetryReport s = symmetry_check(c.topology(), c.engine());
    if (!s.applicable) return skip(r, s.reason);
    r.hypothesis_reason = "pure, connected, connected vertex links";
    r.lhs = {s.lhs};
    r.rhs = {s.rhs};
    r.details = {{"reduced_rhs", {s.reduced_rhs}}};
    r.verdict = s.lhs == s.rhs ? Verdict::Pass : (s.lhs == s.reduced_rhs ? Verdict::Observed : Verdict::Fail);
    return;
  }
  if (id == "tau-top") {
    r.lhs = {c.tau()[static_cast<std::size_t>(d - 1)]};
    r.rhs = {c.sigma()[static_cast<std::size_t>(d - 1)]};
    return compare(r);
  }
  if (id == "tau-conjecture") {
    r.hypothesis_reason = c.buchsbaum() ? "Buchsbaum" : "not Buchsbaum";
    r.lhs = c.tau();
    r.rhs = range(0, d, [&](int i) { return predict_tau_conjecture(c.topology(), i); });
    r.details = {{"h_sigma", c.sigma()}};
    r.verdict = Verdict::Observed;
    return;
  }
  throw std::invalid_argument("unknown theorem id '" + id + "'");
}

VerificationReport run_in(const std::string& id, Context& c, const std::string& name, std::uint64_t p) {
  if (!is_theorem_id(id)) throw std::invalid_argument("unknown theorem id '" + id + "'");
  VerificationReport r;
  r.theorem = id;
  r.complex = name;
  r.field = p;
  r.seed = c.seed();
  const auto start = std::chrono::steady_clock::now();
  run_theorem(id, c, r);
  r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::uint64_t as_u64(const nlohmann::json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw ConfigError(std::string("suite config: ") + what + " must be a nonnegative integer");
  return j.get<std::uint64_t>();
}

int as_int(const nlohmann::json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_number_integer())
    throw ConfigError(std::string("suite config: random entry needs integer '") + key + "'");
  return obj[key].get<int>();
}

void add_random(const nlohmann::json& params, bool pure, std::vector<SuiteComplex>& out) {
  if (!params.is_object()) throw ConfigError("suite config: random entry must be an object");
  const int n = as_int(params, "n");
  const int dim = as_int(params, "dim");
  const std::uint64_t seed = params.contains("seed") ? as_u64(params["seed"], "seed") : 1;
  const std::uint64_t repeat = params.contains("repeat") ? as_u64(params["repeat"], "repeat") : 1;
  for (std::uint64_t k = 0; k < repeat; ++k) {
    std::ostringstream name;
    try {
      if (pure) {
        const int count = as_int(params, "count");
        name << "random_pure(n=" << n << ",dim=" << dim << ",count=" << count << ",seed=" << seed + k << ")";
        out.push_back({name.str(), random_pure_complex(n, dim, count, seed + k)});
      } else {
        if (!params.contains("density") || !params["density"].is_number())
          throw ConfigError("suite config: random entry needs numeric 'density'");
        const double density = params["density"].get<double>();
        name << "random(n=" << n << ",dim=" << dim << ",density=" << density << ",seed=" << seed + k << ")";
        out.push_back({name.str(), random_complex(n, dim, density, seed + k)});
      }
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("suite config: ") + e.what());
    }
  }
}

}  // namespace

VerificationReport verify(const std::string& theorem, const SimplicialComplex& delta, const std::string& name,
                          std::uint64_t p, std::uint64_t seed, const VerifyOptions& options) {
  if (!is_theorem_id(theorem)) throw std::invalid_argument("unknown theorem id '" + theorem + "'");
  Context c(delta, p, seed, options.strict_prime_field);
  return run_in(theorem, c, name, p);
}

SuiteConfig default_suite() {
  SuiteConfig s;
  for (const auto& e : catalog()) s.complexes.push_back({e.name, e.complex});
  s.primes = {2, 3, 2147483647};
  s.seeds = {1};
  s.theorems = theorem_ids();
  return s;
}

SuiteConfig parse_suite_config(const std::string& json_text, const std::string& base_dir) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("suite config: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("suite config: top level must be an object");
  SuiteConfig s;
  const SuiteConfig defaults = default_suite();
  s.primes = defaults.primes;
  s.seeds = defaults.seeds;
  s.theorems = defaults.theorems;
  for (const auto& [key, value] : j.items()) {
    if (key != "complexes" && key != "primes" && key != "seeds" && key != "theorems" && key != "strict_prime_field")
      throw ConfigError("suite config: unknown key '" + key + "'");
    if (key != "strict_prime_field" && !value.is_array()) throw ConfigError("suite config: '" + key + "' must be a list");
  }
  if (j.contains("strict_prime_field")) {
    if (!j["strict_prime_field"].is_boolean()) throw ConfigError("suite config: strict_prime_field must be boolean");
    s.strict_prime_field = j["strict_prime_field"].get<bool>();
  }
  if (j.contains("primes")) {
    s.primes.clear();
    for (const auto& p : j["primes"]) {
      const std::uint64_t v = as_u64(p, "prime");
      if (v >= (1ULL << 63U) || !is_prime(v)) throw ConfigError("suite config: " + std::to_string(v) + " is not a prime below 2^63");
      s.primes.push_back(v);
    }
  }
  if (j.contains("seeds")) {
    s.seeds.clear();
    for (const auto& x : j["seeds"]) s.seeds.push_back(as_u64(x, "seed"));
  }
  if (j.contains("theorems")) {
    s.theorems.clear();
    for (const auto& t : j["theorems"]) {
      if (!t.is_string() || !is_theorem_id(t.get<std::string>()))
        throw ConfigError("suite config: unknown theorem " + t.dump());
      s.theorems.push_back(t.get<std::string>());
    }
  }
  if (j.contains("complexes")) {
    for (const auto& item : j["complexes"]) {
      if (item.is_string()) {
        const std::string n = item.get<std::string>();
        if (n == "catalog") {
          for (const auto& e : catalog()) s.complexes.push_back({e.name, e.complex});
          continue;
        }
        try {
          s.complexes.push_back({n, catalog_entry(n).complex});
        } catch (const std::out_of_range& e) {
          throw ConfigError(std::string("suite config: ") + e.what());
        }
      } else if (item.is_object() && item.size() == 1 && item.contains("file")) {
        if (!item["file"].is_string()) throw ConfigError("suite config: 'file' must be a path");
        const std::string path = item["file"].get<std::string>();
        const std::filesystem::path full = std::filesystem::path(path).is_absolute()
                                               ? std::filesystem::path(path)
                                               : std::filesystem::path(base_dir) / path;
        s.complexes.push_back({path, load_complex_file(full.string())});
      } else if (item.is_object() && item.size() == 1 && item.contains("random")) {
        add_random(item["random"], false, s.complexes);
      } else if (item.is_object() && item.size() == 1 && item.contains("random_pure")) {
        add_random(item["random_pure"], true, s.complexes);
      } else {
        throw ConfigError("suite config: cannot read complex entry " + item.dump());
      }
    }
  }
  return s;
}

unsigned suite_threads() {
  const char* env = std::getenv("HVEC_THREADS");
  if (env != nullptr) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<VerificationReport> run_suite(const SuiteConfig& config, unsigned threads) {
  struct Job {
    std::size_t complex;
    std::uint64_t p;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (std::size_t k = 0; k < config.complexes.size(); ++k)
    for (std::uint64_t p : config.primes)
      for (std::uint64_t s : config.seeds) jobs.push_back({k, p, s});
  std::vector<std::vector<VerificationReport>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const Job& job = jobs[i];
      const SuiteComplex& sc = config.complexes[job.complex];
      Context c(sc.complex, job.p, job.seed, config.strict_prime_field);
      std::string genericity;
      for (const auto& id : config.theorems) {
        if (!genericity.empty()) {
          VerificationReport r;
          r.theorem = id;
          r.complex = sc.name;
          r.field = job.p;
          r.seed = job.seed;
          skip(r, genericity);
          results[i].push_back(std::move(r));
          continue;
        }
        try {
          results[i].push_back(run_in(id, c, sc.name, job.p));
        } catch (const GenericityError& e) {
          genericity = std::string("genericity: ") + e.what();
          VerificationReport r;
          r.theorem = id;
          r.complex = sc.name;
          r.field = job.p;
          r.seed = job.seed;
          skip(r, genericity);
          results[i].push_back(std::move(r));
        }
      }
    }
  };
  const unsigned n = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::vector<VerificationReport> out;
  for (auto& r : results)
    for (auto& x : r) out.push_back(std::move(x));
  return out;
}

Analysis analyze(const SimplicialComplex& delta, const std::string& name, std::uint64_t p, std::uint64_t seed,
                 bool strict_prime_field) {
  if (delta.is_void()) throw std::invalid_argument("cannot analyze the void complex");
  Analysis a;
  const Field f = working_field(p, strict_prime_field);
  a.complex = name;
  a.field = p;
  a.field_name = f.name();
  a.seed = seed;
  a.f = delta.f_vector();
  a.h = delta.h_vector();
  a.betti = reduced_betti(delta, f).values;
  const AlgebraEngine e(delta, generate_lsop(delta, seed, f));
  a.attempts = e.system().attempts;
  a.h_alg = e.h_alg();
  a.h_sigma = h_sigma(e);
  a.h_tau = h_tau(e);
  a.pure = delta.is_pure();
  a.buchsbaum = is_buchsbaum(delta, f);
  a.cohen_macaulay = a.buchsbaum && is_cohen_macaulay(delta, f);
  return a;
}

}  // namespace hvec
