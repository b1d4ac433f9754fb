#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hvec/complex.hpp"
#include "hvec/field.hpp"

namespace hvec {

enum class Verdict { Pass, Fail, Observed, Skip };
std::string to_string(Verdict v);

struct VerificationReport {
  std::string theorem;
  std::string complex;
  std::uint64_t field = 0;
  std::uint64_t seed = 0;
  bool hypothesis = true;
  std::string hypothesis_reason;
  std::vector<std::int64_t> lhs;
  std::vector<std::int64_t> rhs;
  /// Auxiliary named sequences, e.g. the second side of a two-part identity.
  std::vector<std::pair<std::string, std::vector<std::int64_t>>> details;
  Verdict verdict = Verdict::Skip;
  double wall_time_ms = 0;
};

/// Known theorem ids, in suite order.
const std::vector<std::string>& theorem_ids();
bool is_theorem_id(const std::string& id);

/// GF(p) itself when `strict`, otherwise the smallest GF(p^k) with p^k ≥ 2^31.
Field working_field(std::uint64_t p, bool strict = false);

struct VerifyOptions {
  bool strict_prime_field = false;
};

/// Throws std::invalid_argument for an unknown id and GenericityError when no
/// l.s.o.p. is found.
VerificationReport verify(const std::string& theorem, const SimplicialComplex& delta, const std::string& name,
                          std::uint64_t p, std::uint64_t seed, const VerifyOptions& options = {});

struct SuiteComplex {
  std::string name;
  SimplicialComplex complex;
};

struct SuiteConfig {
  std::vector<SuiteComplex> complexes;
  std::vector<std::uint64_t> primes;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> theorems;
  bool strict_prime_field = false;
};

/// Every catalog complex × {2, 3, 2147483647} × every theorem, seed 1.
SuiteConfig default_suite();

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// JSON: {"complexes": [name | "catalog" | {"file": path} | {"random": {n, dim, density, seed}}
///        | {"random_pure": {n, dim, count, seed}}], "primes": [...], "seeds": [...], "theorems": [...]}.
/// Missing primes, seeds or theorems fall back to the defaults; a missing complex list is empty.
SuiteConfig parse_suite_config(const std::string& json_text, const std::string& base_dir = ".");

/// Worker count from HVEC_THREADS, else the hardware concurrency.
unsigned suite_threads();

/// Runs the full cross-product; a genericity failure becomes a SKIP with its reason.
std::vector<VerificationReport> run_suite(const SuiteConfig& config, unsigned threads = suite_threads());

struct Analysis {
  std::string complex;
  std::uint64_t field = 0;
  std::string field_name;
  std::uint64_t seed = 0;
  int attempts = 0;
  std::vector<std::int64_t> f, h, betti;  // betti from index -1
  std::vector<std::int64_t> h_alg, h_sigma, h_tau;
  bool pure = false;
  bool buchsbaum = false;
  bool cohen_macaulay = false;
};

Analysis analyze(const SimplicialComplex& delta, const std::string& name, std::uint64_t p, std::uint64_t seed,
                 bool strict_prime_field = false);

}  // namespace hvec
