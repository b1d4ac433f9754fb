#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "hvec/complex.hpp"
#include "hvec/field.hpp"
#include "hvec/linalg.hpp"

namespace hvec {

/// Integer sequence indexed from `first`; reads outside the stored range give 0.
struct DegreeSeries {
  int first = 0;
  std::vector<std::int64_t> values;

  std::int64_t at(int i) const {
    const int k = i - first;
    return (k < 0 || k >= static_cast<int>(values.size())) ? 0 : values[static_cast<std::size_t>(k)];
  }
  int last() const { return first + static_cast<int>(values.size()) - 1; }
  bool operator==(const DegreeSeries& o) const = default;
};

/// Cochains on a set of faces of Δ, degree i carried by faces of dimension i.
///
/// The reduced complex uses every face (∅ sits in degree -1). The relative
/// complex of (Δ, Γ) uses the faces of Δ not in Γ. Faces are oriented by
/// sorted vertex index and δ(φ)(G) = Σ_k (-1)^k φ(G minus its k-th vertex).
class CochainComplex {
 public:
  static CochainComplex reduced(const SimplicialComplex& delta, const Field& field);
  /// Throws std::invalid_argument unless Γ ⊆ Δ (Γ must share Δ's vertex names).
  static CochainComplex relative(const SimplicialComplex& delta, const SimplicialComplex& gamma, const Field& field);
  /// The pair (Δ, cost F): cochains on the faces containing F.
  static CochainComplex relative_to_contrastar(const SimplicialComplex& delta, Face f, const Field& field);

  const Field& field() const noexcept { return field_; }
  int min_degree() const noexcept { return -1; }
  int max_degree() const noexcept { return static_cast<int>(basis_.size()) - 2; }
  /// Faces carrying degree-i cochains, in canonical order.
  const std::vector<Face>& basis(int i) const;
  std::size_t dim(int i) const { return basis(i).size(); }
  /// Position of a face in basis(f.dim()), or -1.
  int position(Face f) const;
  /// δ^i : C^i → C^{i+1}, a dim(i+1) × dim(i) matrix.
  FieldMatrix coboundary(int i) const;
  /// dim H^i for i = -1..max_degree.
  DegreeSeries betti() const;

 private:
  CochainComplex(const SimplicialComplex& delta, const Field& field, const std::function<bool(Face)>& keep);

  Field field_;
  std::vector<std::vector<Face>> basis_;  // index i + 1
  std::unordered_map<Face, int, FaceHash> position_;
};

/// A basis of H^i: representatives are the canonical basis of Z^i reduced modulo B^i.
class CohomologyBasis {
 public:
  CohomologyBasis(const CochainComplex& c, int degree);

  int degree() const noexcept { return degree_; }
  std::size_t dim() const noexcept { return classes_.dim(); }
  const std::vector<SparseVector>& representatives() const noexcept { return classes_.basis(); }
  const Subspace& cocycles() const noexcept { return cocycles_; }
  const Subspace& coboundaries() const noexcept { return coboundaries_; }
  /// Coordinates of the class of a cocycle z.
  std::vector<Scalar> class_of(const SparseVector& z) const;

 private:
  int degree_;
  Subspace cocycles_;
  Subspace coboundaries_;
  Subspace classes_;
};

/// β̃_{-1..dim}. Throws on the void complex.
DegreeSeries reduced_betti(const SimplicialComplex& delta, const Field& field);
DegreeSeries relative_betti(const SimplicialComplex& delta, const SimplicialComplex& gamma, const Field& field);
/// β_i(Δ, cost F), i = -1..dim.
DegreeSeries contrastar_betti(const SimplicialComplex& delta, Face f, const Field& field);

struct LinkContrastarReport {
  Face face;
  DegreeSeries relative;  // dim H^m(Δ, cost F)
  DegreeSeries link;      // β̃_{m-|F|}(lk F), indexed by m
  bool ok = false;
};

/// Dimension check of H^m(Δ, cost F) ≅ H̃^{m-|F|}(lk F) for all m.
LinkContrastarReport link_contrastar_check(const SimplicialComplex& delta, Face f, const Field& field);

/// χ̃_i = Σ_{j=-1}^{i} (-1)^j β̃_j; 0 for i ≤ -2.
std::int64_t truncated_euler(const DegreeSeries& reduced_betti, int i);
std::int64_t truncated_euler(const SimplicialComplex& delta, int i, const Field& field);
/// Σ_j (-1)^j β̃_j over all degrees.
std::int64_t reduced_euler(const DegreeSeries& reduced_betti);

/// H^i(Δ, cost v) → H̃^i(Δ) in CohomologyBasis coordinates (target rows, source columns).
FieldMatrix inclusion_induced_map(const SimplicialComplex& delta, int v, int i, const Field& field);

bool is_buchsbaum(const SimplicialComplex& delta, const Field& field);
bool is_cohen_macaulay(const SimplicialComplex& delta, const Field& field);

}  // namespace hvec
