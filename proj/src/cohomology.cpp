#include "hvec/cohomology.hpp"

#include <stdexcept>

namespace hvec {

CochainComplex::CochainComplex(const SimplicialComplex& delta, const Field& field, const std::function<bool(Face)>& keep)
    : field_(field) {
  basis_.resize(static_cast<std::size_t>(delta.dimension() + 2));
  for (int i = -1; i <= delta.dimension(); ++i) {
    auto& b = basis_[static_cast<std::size_t>(i + 1)];
    for (Face f : delta.faces_of_dim(i)) {
      if (!keep(f)) continue;
      position_.emplace(f, static_cast<int>(b.size()));
      b.push_back(f);
    }
  }
}

CochainComplex CochainComplex::reduced(const SimplicialComplex& delta, const Field& field) {
  return CochainComplex(delta, field, [](Face) { return true; });
}

CochainComplex CochainComplex::relative(const SimplicialComplex& delta, const SimplicialComplex& gamma,
                                        const Field& field) {
  if (!gamma.is_void() && gamma.vertex_names() != delta.vertex_names())
    throw std::invalid_argument("relative cohomology: subcomplex uses different vertex names");
  for (Face f : gamma.facets())
    if (!delta.contains(f)) throw std::invalid_argument("relative cohomology: Γ is not a subcomplex of Δ");
  return CochainComplex(delta, field, [&gamma](Face f) { return !gamma.contains(f); });
}

CochainComplex CochainComplex::relative_to_contrastar(const SimplicialComplex& delta, Face f, const Field& field) {
  if (!delta.contains(f)) throw std::invalid_argument("contrastar of a non-face");
  return CochainComplex(delta, field, [f](Face g) { return f.subset_of(g); });
}

const std::vector<Face>& CochainComplex::basis(int i) const {
  static const std::vector<Face> none;
  if (i < -1 || i + 1 >= static_cast<int>(basis_.size())) return none;
  return basis_[static_cast<std::size_t>(i + 1)];
}

int CochainComplex::position(Face f) const {
  const auto it = position_.find(f);
  return it == position_.end() ? -1 : it->second;
}

FieldMatrix CochainComplex::coboundary(int i) const {
  const auto& src = basis(i);
  const auto& dst = basis(i + 1);
  std::vector<Triplet> entries;
  for (std::size_t r = 0; r < dst.size(); ++r) {
    const std::vector<int> vs = dst[r].vertices();
    for (std::size_t k = 0; k < vs.size(); ++k) {
      const int c = position(dst[r].minus(Face::vertex(vs[k])));
      if (c < 0) continue;
      entries.push_back({static_cast<Index>(r), static_cast<Index>(c), k % 2 == 0 ? field_.one() : field_.from_int(-1)});
    }
  }
  return FieldMatrix::from_triplets(field_, dst.size(), src.size(), std::move(entries));
}

DegreeSeries CochainComplex::betti() const {
  DegreeSeries out;
  out.first = -1;
  const int top = max_degree();
  std::vector<std::int64_t> ranks(static_cast<std::size_t>(top + 2), 0);  // rank δ^i at i + 1
  for (int i = -1; i <= top; ++i) ranks[static_cast<std::size_t>(i + 1)] = static_cast<std::int64_t>(rank(coboundary(i)));
  for (int i = -1; i <= top; ++i) {
    const std::int64_t below = i >= 0 ? ranks[static_cast<std::size_t>(i)] : 0;
    out.values.push_back(static_cast<std::int64_t>(dim(i)) - ranks[static_cast<std::size_t>(i + 1)] - below);
  }
  return out;
}

CohomologyBasis::CohomologyBasis(const CochainComplex& c, int degree)
    : degree_(degree),
      cocycles_(kernel_basis(c.coboundary(degree))),
      coboundaries_(column_space(c.coboundary(degree - 1))),
      classes_(c.field(), c.dim(degree)) {
  std::vector<SparseVector> reduced;
  reduced.reserve(cocycles_.dim());
  for (const auto& z : cocycles_.basis()) reduced.push_back(coboundaries_.reduce(z));
  classes_ = Subspace::span(c.field(), c.dim(degree), reduced);
}

std::vector<Scalar> CohomologyBasis::class_of(const SparseVector& z) const {
  return classes_.coordinates(coboundaries_.reduce(z));
}

DegreeSeries reduced_betti(const SimplicialComplex& delta, const Field& field) {
  if (delta.is_void()) throw std::invalid_argument("reduced Betti numbers of the void complex");
  return CochainComplex::reduced(delta, field).betti();
}

DegreeSeries relative_betti(const SimplicialComplex& delta, const SimplicialComplex& gamma, const Field& field) {
  return CochainComplex::relative(delta, gamma, field).betti();
}

DegreeSeries contrastar_betti(const SimplicialComplex& delta, Face f, const Field& field) {
  return CochainComplex::relative_to_contrastar(delta, f, field).betti();
}

LinkContrastarReport link_contrastar_check(const SimplicialComplex& delta, Face f, const Field& field) {
  LinkContrastarReport r;
  r.face = f;
  r.relative = contrastar_betti(delta, f, field);
  const DegreeSeries lk = reduced_betti(delta.link(f), field);
  r.link.first = -1;
  for (int m = -1; m <= delta.dimension(); ++m) r.link.values.push_back(lk.at(m - f.size()));
  r.ok = true;
  for (int m = -1 - f.size(); m <= delta.dimension() + 1; ++m)
    if (r.relative.at(m) != lk.at(m - f.size())) r.ok = false;
  return r;
}

std::int64_t truncated_euler(const DegreeSeries& betti, int i) {
  std::int64_t s = 0;
  for (int j = -1; j <= i; ++j) s += (j % 2 == 0 ? 1 : -1) * betti.at(j);
  return s;
}

std::int64_t truncated_euler(const SimplicialComplex& delta, int i, const Field& field) {
  if (i < -1) return 0;
  return truncated_euler(reduced_betti(delta, field), i);
}

std::int64_t reduced_euler(const DegreeSeries& betti) { return truncated_euler(betti, betti.last()); }

FieldMatrix inclusion_induced_map(const SimplicialComplex& delta, int v, int i, const Field& field) {
  if (v < 0 || v >= kMaxVertices || !delta.contains(Face::vertex(v)))
    throw std::invalid_argument("inclusion_induced_map: not a vertex");
  const Face fv = Face::vertex(v);
  const CochainComplex rel = CochainComplex::relative_to_contrastar(delta, fv, field);
  const CochainComplex full = CochainComplex::reduced(delta, field);
  const CohomologyBasis src(rel, i);
  const CohomologyBasis dst(full, i);
  std::vector<Triplet> entries;
  for (std::size_t s = 0; s < src.dim(); ++s) {
    SparseVector z;
    for (const auto& [k, x] : src.representatives()[s])
      z.emplace_back(static_cast<Index>(full.position(rel.basis(i)[k])), x);
    z = normalize(field, std::move(z));
    const std::vector<Scalar> coords = dst.class_of(z);
    for (std::size_t t = 0; t < coords.size(); ++t)
      if (coords[t] != 0) entries.push_back({static_cast<Index>(t), static_cast<Index>(s), coords[t]});
  }
  return FieldMatrix::from_triplets(field, dst.dim(), src.dim(), std::move(entries));
}

namespace {

bool vanishing_below_top(const SimplicialComplex& delta, const Field& field, bool include_empty) {
  if (delta.is_void()) throw std::invalid_argument("Buchsbaum test of the void complex");
  if (!delta.is_pure()) return false;
  const int d = delta.d();
  for (Face f : delta.faces()) {
    if (f.empty() && !include_empty) continue;
    const DegreeSeries b = f.empty() ? reduced_betti(delta, field) : contrastar_betti(delta, f, field);
    for (int i = -1; i < d - 1; ++i)
      if (b.at(i) != 0) return false;
  }
  return true;
}

}  // namespace

bool is_buchsbaum(const SimplicialComplex& delta, const Field& field) {
  return vanishing_below_top(delta, field, false);
}

bool is_cohen_macaulay(const SimplicialComplex& delta, const Field& field) {
  return vanishing_below_top(delta, field, true);
}

}  // namespace hvec
