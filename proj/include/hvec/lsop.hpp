#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "hvec/complex.hpp"
#include "hvec/field.hpp"
#include "hvec/linalg.hpp"
#include "hvec/stanley_reisner.hpp"

namespace hvec {

class GenericityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Θ = (θ_1, ..., θ_d) together with the seed that produced it.
struct LsopSystem {
  Field field;
  std::vector<LinearForm> forms;
  std::uint64_t seed = 0;
  int attempts = 0;

  int size() const noexcept { return static_cast<int>(forms.size()); }
  const LinearForm& theta(int j) const { return forms.at(static_cast<std::size_t>(j - 1)); }
};

/// Every facet's column submatrix of Θ has full column rank.
bool is_lsop(const SimplicialComplex& delta, const Field& f, const std::vector<LinearForm>& forms);
bool is_lsop(const SimplicialComplex& delta, const LsopSystem& theta);

constexpr int kLsopRetries = 64;

/// d forms with uniform coefficients on the vertices of Δ, redrawn until is_lsop holds.
LsopSystem generate_lsop(const SimplicialComplex& delta, std::uint64_t seed, const Field& f,
                         int retries = kLsopRetries);

/// Bitmask over forms: bit j-1 selects θ_j.
using FormMask = std::uint32_t;
inline FormMask prefix_mask(int j) { return j <= 0 ? 0 : ((FormMask{1} << j) - 1); }
inline FormMask hat_mask(int d, int j) { return prefix_mask(d) & ~(FormMask{1} << (j - 1)); }

/// Graded slices of 𝕜[Δ] modulo subsets of Θ, with caching.
class AlgebraEngine {
 public:
  AlgebraEngine(std::shared_ptr<const StanleyReisnerRing> ring, LsopSystem theta);
  AlgebraEngine(const SimplicialComplex& delta, LsopSystem theta);

  const SimplicialComplex& complex() const noexcept { return ring_->complex(); }
  const StanleyReisnerRing& ring() const noexcept { return *ring_; }
  const LsopSystem& system() const noexcept { return theta_; }
  const Field& field() const noexcept { return theta_.field; }
  int d() const noexcept { return theta_.size(); }
  std::size_t dim(int i) const { return ring_->dim(i); }

  /// (θ_j : j ∈ mask)·𝕜[Δ]_{i-1} inside 𝕜[Δ]_i.
  const Subspace& ideal_slice(FormMask mask, int i) const;
  /// ·θ_j : 𝕜[Δ]_i → 𝕜[Δ]_{i+1}.
  const FieldMatrix& mult(int j, int i) const;
  /// Kernel of ·θ_j on (𝕜[Δ]/(S))_i: lifted = {m : θ_j m ∈ (S)_{i+1}}, base = (S)_i.
  QuotientSlice colon(FormMask s, int j, int i) const;

  std::int64_t h_alg(int i) const;
  /// i = 0..d
  std::vector<std::int64_t> h_alg() const;
  /// K⁰(j)_i, the kernel of ·θ_j on (𝕜[Δ]/(θ_1..θ_{j-1}))_i.
  QuotientSlice kernel_K0(int j, int i) const;

 private:
  std::shared_ptr<const StanleyReisnerRing> ring_;
  LsopSystem theta_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<FormMask, int>, std::unique_ptr<Subspace>> slices_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<FieldMatrix>> mults_;
};

std::vector<std::int64_t> h_alg(const SimplicialComplex& delta, const LsopSystem& theta);

struct HilbertDecompositionReport {
  std::vector<std::int64_t> lhs;                    // h^𝔞 as a polynomial
  std::vector<std::int64_t> rhs;                    // h + Σ_j (1-t)^{d-j} t Hilb(K⁰(j))
  std::vector<std::int64_t> residual;               // lhs - rhs
  std::vector<std::vector<std::int64_t>> kernels;   // kernels[j-1][i] = dim K⁰(j)_i, i = 0..d+1
  bool ok() const;
};

HilbertDecompositionReport hilbert_decomposition_check(const AlgebraEngine& engine);

struct GuardResult {
  std::vector<std::int64_t> values;                // agreed values, or the coordinatewise minimum
  bool stable = true;
  std::vector<std::uint64_t> seeds;
  std::vector<std::vector<std::int64_t>> per_seed;
};

using DimensionComputation = std::function<std::vector<std::int64_t>(const LsopSystem&)>;

/// Runs the computation under systems drawn from each seed and compares the results.
GuardResult genericity_guard(const SimplicialComplex& delta, const Field& f, const std::vector<std::uint64_t>& seeds,
                             const DimensionComputation& computation);
/// Same for explicitly given systems; each must be an l.s.o.p. (std::invalid_argument otherwise).
GuardResult genericity_guard(const SimplicialComplex& delta, const std::vector<LsopSystem>& systems,
                             const DimensionComputation& computation);

}  // namespace hvec
