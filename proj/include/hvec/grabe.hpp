#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "hvec/cohomology.hpp"
#include "hvec/complex.hpp"
#include "hvec/field.hpp"
#include "hvec/linalg.hpp"
#include "hvec/lsop.hpp"

namespace hvec {

/// Cached Betti numbers of Δ, its links and contrastars, and the maps ι_v.
class Topology {
 public:
  Topology(SimplicialComplex delta, Field field);

  const SimplicialComplex& complex() const noexcept { return delta_; }
  const Field& field() const noexcept { return field_; }
  int d() const noexcept { return delta_.d(); }

  /// β̃(Δ) from index -1.
  const DegreeSeries& betti() const;
  /// β̃(lk F); lk ∅ = Δ.
  const DegreeSeries& link_betti(Face f) const;
  /// β(Δ, cost F).
  const DegreeSeries& contrastar_betti(Face f) const;
  /// ι_v : H^i(Δ, cost v) → H̃^i(Δ).
  const FieldMatrix& iota(int v, int i) const;

  std::int64_t chi(int i) const { return truncated_euler(betti(), i); }
  std::int64_t link_chi(Face f, int i) const { return truncated_euler(link_betti(f), i); }
  std::int64_t link_euler(Face f) const { return reduced_euler(link_betti(f)); }

 private:
  SimplicialComplex delta_;
  Field field_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<Face, std::unique_ptr<DegreeSeries>, FaceHash> links_;
  mutable std::unordered_map<Face, std::unique_ptr<DegreeSeries>, FaceHash> contrastars_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<FieldMatrix>> iotas_;
};

/// dim H^i_𝔪(𝕜[Δ])_{-a}, a ≥ 0.
std::int64_t local_cohomology_hilbert(const Topology& t, int i, int a);
std::int64_t local_cohomology_hilbert(const SimplicialComplex& delta, int i, int a, const Field& field);

/// dim (L^i_j)_{-1}: the common kernel of Φ_1..Φ_j on ⊕_v H^{i-1}(Δ, cost v),
/// where Φ_p acts on the v-summand as θ_p[v]·ι_v.
std::int64_t L_dim(const Topology& t, const LsopSystem& theta, int i, int j);

/// h_{d-1} + dim(L^{d-1}_d)_{-1} + (-1)^{d-1} Σ_F C(d-|F|, d-1) χ̃_{d-3-|F|}(lk F).
/// Only |F| ≤ 1 contributes; `full_sum` runs over every face anyway.
std::int64_t predict_h_alg_dminus1(const Topology& t, const LsopSystem& theta, bool full_sum = false);
/// h_{d-1} + (-1)^{d-1} Σ_F C(d-|F|, d-1) χ̃_{d-2-|F|}(lk F).
std::int64_t predict_h_sigma_dminus1(const Topology& t, bool full_sum = false);

/// h_i + (-1)^i C(d,i) χ̃_{i-2}(Δ).
std::int64_t predict_schenzel(const Topology& t, int i);
/// h_i + (-1)^i C(d,i) χ̃_{i-1}(Δ) for i < d, and β̃_{d-1}(Δ) at i = d.
std::int64_t predict_mny(const Topology& t, int i);
std::int64_t predict_stanley(const SimplicialComplex& delta, int i);
/// h_i + (-1)^i Σ_F C(d-|F|, i) χ̃_{i-1-|F|}(lk F).
std::int64_t predict_tau_conjecture(const Topology& t, int i);
/// dim K⁰(j)_{j-2} = (j-1)β̃_{j-3} + dim(L^{j-1}_j)_{-1} + dim(L^{j-2}_{j-1})_{-1} - Σ_v β_{j-3}(Δ, cost v).
std::int64_t predict_kernel_K0(const Topology& t, const LsopSystem& theta, int j);
/// For Δ the suspension of a Buchsbaum complex:
/// h_i + (-1)^i [C(d-2, i-2) χ̃_{i-2}(Δ) - C(d-2, i) χ̃_{i-1}(Δ)].
std::int64_t predict_suspension(const Topology& suspended, int i);

struct SuspensionReport {
  bool hypothesis = false;  // Γ Buchsbaum
  std::vector<std::int64_t> h_alg;          // h^𝔞(ΣΓ), computed
  std::vector<std::int64_t> predicted;      // predict_suspension
  std::vector<std::int64_t> base_h_alg;     // h^𝔞(Γ), computed
  std::vector<std::int64_t> corollary;      // h^𝔞_i(Γ) + h^𝔞_{i-1}(Γ) - C(d-2, i-1) β̃_{i-2}(Γ)
  std::vector<std::int64_t> torsion;        // dim M⁰(d-1)_i of ΣΓ
  std::vector<std::int64_t> torsion_pattern;  // C(d-3, i) β̃_i + C(d-3, i-2) β̃_{i-1}
  bool theorem_ok() const { return h_alg == predicted; }
  bool corollary_ok() const { return h_alg == corollary; }
  bool torsion_ok() const { return torsion == torsion_pattern; }
};

/// Γ need not be Buchsbaum; `hypothesis` records whether it is.
SuspensionReport suspension_corollary_check(const SimplicialComplex& gamma, const Field& field, std::uint64_t seed);

struct DsReport {
  std::vector<std::int64_t> lhs;  // h_{d-j} - h_j, j = 0..d
  std::vector<std::int64_t> rhs;
  bool ok() const { return lhs == rhs; }
};

/// Throws std::invalid_argument for non-pure Δ.
DsReport ds_relation_check(const Topology& t);

struct SymmetryReport {
  bool applicable = false;
  std::string reason;        // why it was skipped
  std::int64_t lhs = 0;      // h^𝔰_1 - h^𝔰_{d-1}
  std::int64_t rhs = 0;      // (-1)^{d-1} Σ_F C(d-|F|, d-1)(β_{d-1-|F|}(lk F) - β_0(lk F)), unreduced β
  std::int64_t reduced_rhs = 0;  // Σ_{|F|≤1} (-1)^{|F|} C(d-|F|, d-1)(β̃_{d-1-|F|}(lk F) - 1)
};

/// `lhs` is filled with h^𝔰 from the engine; the right sides come from t.
SymmetryReport symmetry_check(const Topology& t, const AlgebraEngine& e);

}  // namespace hvec
