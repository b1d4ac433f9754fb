#include "hvec/grabe.hpp"

#include <stdexcept>

#include "hvec/sigma.hpp"

namespace hvec {

namespace {

std::int64_t sign(int e) { return e % 2 == 0 ? 1 : -1; }

std::int64_t h_at(const std::vector<std::int64_t>& h, int i) {
  return (i < 0 || i >= static_cast<int>(h.size())) ? 0 : h[static_cast<std::size_t>(i)];
}

template <class Map, class Make>
const auto& memo(std::mutex& m, Map& map, const typename Map::key_type& key, Make make) {
  {
    const std::lock_guard<std::mutex> lock(m);
    const auto it = map.find(key);
    if (it != map.end()) return *it->second;
  }
  auto value = make();
  const std::lock_guard<std::mutex> lock(m);
  auto& slot = map[key];
  if (!slot) slot = std::move(value);
  return *slot;
}

// Σ_F C(d-|F|, k) χ̃_{k+shift-|F|}(lk F); faces with C = 0 are skipped unless `all`.
std::int64_t link_chi_sum(const Topology& t, int k, int shift, bool all) {
  const int d = t.d();
  std::int64_t s = 0;
  for (Face f : t.complex().faces()) {
    const std::int64_t c = binomial(d - f.size(), k);
    if (c == 0 && !all) continue;
    s += c * t.link_chi(f, k + shift - f.size());
  }
  return s;
}

// β_k with the usual unreduced convention; the complex {∅} has no unreduced homology.
std::int64_t unreduced(const DegreeSeries& reduced, int k) {
  if (k < 0) return 0;
  return reduced.at(k) + ((k == 0 && reduced.at(-1) == 0) ? 1 : 0);
}

}  // namespace

Topology::Topology(SimplicialComplex delta, Field field) : delta_(std::move(delta)), field_(std::move(field)) {
  if (delta_.is_void()) throw std::invalid_argument("Topology of the void complex");
}

const DegreeSeries& Topology::betti() const { return link_betti(Face{}); }

const DegreeSeries& Topology::link_betti(Face f) const {
  return memo(mutex_, links_, f, [&] {
    if (!delta_.contains(f)) throw std::invalid_argument("link of a non-face");
    return std::make_unique<DegreeSeries>(reduced_betti(f.empty() ? delta_ : delta_.link(f), field_));
  });
}

const DegreeSeries& Topology::contrastar_betti(Face f) const {
  return memo(mutex_, contrastars_, f,
              [&] { return std::make_unique<DegreeSeries>(hvec::contrastar_betti(delta_, f, field_)); });
}

const FieldMatrix& Topology::iota(int v, int i) const {
  return memo(mutex_, iotas_, std::pair{v, i},
              [&] { return std::make_unique<FieldMatrix>(inclusion_induced_map(delta_, v, i, field_)); });
}

std::int64_t local_cohomology_hilbert(const Topology& t, int i, int a) {
  if (a < 0) throw std::invalid_argument("local_cohomology_hilbert: a must be nonnegative");
  if (a == 0) return t.betti().at(i - 1);
  std::int64_t s = 0;
  for (Face f : t.complex().faces()) {
    if (f.empty()) continue;
    const std::int64_t c = binomial(a - 1, f.size() - 1);
    if (c != 0) s += c * t.contrastar_betti(f).at(i - 1);
  }
  return s;
}

std::int64_t local_cohomology_hilbert(const SimplicialComplex& delta, int i, int a, const Field& field) {
  return local_cohomology_hilbert(Topology(delta, field), i, a);
}

std::int64_t L_dim(const Topology& t, const LsopSystem& theta, int i, int j) {
  if (j < 0 || j > theta.size()) throw std::out_of_range("L_dim: j must lie in 0..d");
  const Field& f = t.field();
  const std::vector<int> vs = t.complex().vertices();
  std::vector<Triplet> entries;
  std::size_t cols = 0;
  std::size_t rows = 0;
  for (int v : vs) {
    const FieldMatrix& iv = t.iota(v, i - 1);
    rows = iv.rows();
    for (int p = 1; p <= j; ++p) {
      const Scalar c = theta.theta(p)[v];
      if (c == 0) continue;
      for (const Triplet& e : iv.triplets())
        entries.push_back({static_cast<Index>((p - 1) * iv.rows() + e.row), static_cast<Index>(cols + e.col),
                           f.mul(c, e.value)});
    }
    cols += iv.cols();
  }
  if (j == 0 || rows == 0) return static_cast<std::int64_t>(cols);
  const FieldMatrix stack = FieldMatrix::from_triplets(f, rows * static_cast<std::size_t>(j), cols, std::move(entries));
  return static_cast<std::int64_t>(cols) - static_cast<std::int64_t>(rank(stack));
}

std::int64_t predict_h_alg_dminus1(const Topology& t, const LsopSystem& theta, bool full_sum) {
  const int d = t.d();
  return h_at(t.complex().h_vector(), d - 1) + L_dim(t, theta, d - 1, d) +
         sign(d - 1) * link_chi_sum(t, d - 1, -2, full_sum);
}

std::int64_t predict_h_sigma_dminus1(const Topology& t, bool full_sum) {
  const int d = t.d();
  return h_at(t.complex().h_vector(), d - 1) + sign(d - 1) * link_chi_sum(t, d - 1, -1, full_sum);
}

std::int64_t predict_schenzel(const Topology& t, int i) {
  return h_at(t.complex().h_vector(), i) + sign(i) * binomial(t.d(), i) * t.chi(i - 2);
}

std::int64_t predict_mny(const Topology& t, int i) {
  if (i == t.d()) return t.betti().at(i - 1);
  return h_at(t.complex().h_vector(), i) + sign(i) * binomial(t.d(), i) * t.chi(i - 1);
}

std::int64_t predict_stanley(const SimplicialComplex& delta, int i) { return h_at(delta.h_vector(), i); }

std::int64_t predict_tau_conjecture(const Topology& t, int i) {
  return h_at(t.complex().h_vector(), i) + sign(i) * link_chi_sum(t, i, -1, false);
}

std::int64_t predict_kernel_K0(const Topology& t, const LsopSystem& theta, int j) {
  if (j < 1 || j > t.d()) throw std::out_of_range("predict_kernel_K0: j must lie in 1..d");
  std::int64_t s = (j - 1) * t.betti().at(j - 3) + L_dim(t, theta, j - 1, j) + L_dim(t, theta, j - 2, j - 1);
  for (int v : t.complex().vertices()) s -= t.contrastar_betti(Face::vertex(v)).at(j - 3);
  return s;
}

std::int64_t predict_suspension(const Topology& suspended, int i) {
  const int d = suspended.d();
  return h_at(suspended.complex().h_vector(), i) +
         sign(i) * (binomial(d - 2, i - 2) * suspended.chi(i - 2) - binomial(d - 2, i) * suspended.chi(i - 1));
}

SuspensionReport suspension_corollary_check(const SimplicialComplex& gamma, const Field& field, std::uint64_t seed) {
  SuspensionReport r;
  r.hypothesis = is_buchsbaum(gamma, field);
  const SimplicialComplex delta = gamma.suspension();
  const Topology top(delta, field);
  const DegreeSeries base_betti = reduced_betti(gamma, field);
  const int d = delta.d();
  const AlgebraEngine e(delta, generate_lsop(delta, seed, field));
  const AlgebraEngine g(gamma, generate_lsop(gamma, seed, field));
  for (int i = 0; i <= d; ++i) {
    r.h_alg.push_back(e.h_alg(i));
    r.predicted.push_back(predict_suspension(top, i));
    r.base_h_alg.push_back(g.h_alg(i));
    r.corollary.push_back(g.h_alg(i) + g.h_alg(i - 1) - binomial(d - 2, i - 1) * base_betti.at(i - 2));
  }
  if (d >= 3) {
    for (int i = 0; i <= d; ++i) {
      r.torsion.push_back(static_cast<std::int64_t>(saturation_kernel(e, prefix_mask(d - 1), d, i).kernel.dim()));
      r.torsion_pattern.push_back(binomial(d - 3, i) * top.betti().at(i) +
                                  binomial(d - 3, i - 2) * top.betti().at(i - 1));
    }
  }
  return r;
}

DsReport ds_relation_check(const Topology& t) {
  if (!t.complex().is_pure()) throw std::invalid_argument("ds_relation_check: complex is not pure");
  const int d = t.d();
  const std::vector<std::int64_t> h = t.complex().h_vector();
  DsReport r;
  for (int j = 0; j <= d; ++j) {
    r.lhs.push_back(h_at(h, d - j) - h_at(h, j));
    std::int64_t s = 0;
    for (Face f : t.complex().faces()) {
      const std::int64_t c = binomial(d - f.size(), j);
      if (c != 0) s += c * (t.link_euler(f) - sign(d - 1 - f.size()));
    }
    r.rhs.push_back(sign(j) * s);
  }
  return r;
}

SymmetryReport symmetry_check(const Topology& t, const AlgebraEngine& e) {
  SymmetryReport r;
  const SimplicialComplex& delta = t.complex();
  const int d = t.d();
  if (d < 2) {
    r.reason = "dimension below 1";
  } else if (!delta.is_pure()) {
    r.reason = "not pure";
  } else if (t.betti().at(0) != 0) {
    r.reason = "not connected";
  } else {
    for (int v : delta.vertices())
      if (t.link_betti(Face::vertex(v)).at(0) != 0) {
        r.reason = "link of vertex " + delta.vertex_names()[static_cast<std::size_t>(v)] + " is disconnected";
        break;
      }
  }
  if (!r.reason.empty()) return r;
  r.applicable = true;
  r.lhs = h_sigma(e, 1) - h_sigma(e, d - 1);
  for (Face f : delta.faces()) {
    const std::int64_t c = binomial(d - f.size(), d - 1);
    if (c == 0) continue;
    const DegreeSeries& b = t.link_betti(f);
    r.rhs += c * (unreduced(b, d - 1 - f.size()) - unreduced(b, 0));
    if (f.size() <= 1) r.reduced_rhs += sign(f.size()) * c * (b.at(d - 1 - f.size()) - 1);
  }
  r.rhs *= sign(d - 1);
  return r;
}

}  // namespace hvec
