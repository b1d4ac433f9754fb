#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hvec/linalg.hpp"
#include "hvec/lsop.hpp"

namespace hvec {

class SaturationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// {m ∈ 𝕜[Δ]_i : θ_j m ∈ (Θ̂_j)_{i+1}}.
Subspace colon_kernel(const AlgebraEngine& e, int j, int i);

/// (Θ)_i plus every colon kernel: Σ(Θ; 𝕜[Δ])_i.
Subspace sigma_slice(const AlgebraEngine& e, int i);
std::int64_t h_sigma(const AlgebraEngine& e, int i);
/// i = 0..d
std::vector<std::int64_t> h_sigma(const AlgebraEngine& e);

struct Saturation {
  QuotientSlice kernel;  // ∪_N Ker θ^N on (𝕜[Δ]/(S))_i
  int exponent = 0;      // the N at which the chain was cut
};

/// H⁰ of 𝕜[Δ]/(S) in degree i, as the stable kernel of powers of θ_j.
///
/// Starts at N = max(1, d - i), where the chain must already be stable, and
/// checks the next power; keeps going up to N = d + 2, then throws SaturationError.
Saturation saturation_kernel(const AlgebraEngine& e, FormMask s, int j, int i);

/// (Θ)_i plus the lifted π_j(M⁰(Θ̂_j))_i for all j.
Subspace tau_slice(const AlgebraEngine& e, int i);
std::int64_t h_tau(const AlgebraEngine& e, int i);
std::vector<std::int64_t> h_tau(const AlgebraEngine& e);

}  // namespace hvec
