#include "hvec/lsop.hpp"

#include <algorithm>
#include <random>

namespace hvec {

bool is_lsop(const SimplicialComplex& delta, const Field& f, const std::vector<LinearForm>& forms) {
  if (static_cast<int>(forms.size()) != delta.d())
    throw std::invalid_argument("is_lsop: expected d = " + std::to_string(delta.d()) + " forms, got " +
                                std::to_string(forms.size()));
  for (const auto& t : forms)
    if (static_cast<int>(t.coeffs.size()) < delta.universe_size())
      throw std::invalid_argument("is_lsop: form shorter than the vertex set");
  for (Face facet : delta.facets()) {
    const std::vector<int> vs = facet.vertices();
    std::vector<Triplet> entries;
    for (std::size_t r = 0; r < forms.size(); ++r)
      for (std::size_t c = 0; c < vs.size(); ++c)
        entries.push_back({static_cast<Index>(r), static_cast<Index>(c), forms[r][vs[c]]});
    const FieldMatrix m = FieldMatrix::from_triplets(f, forms.size(), vs.size(), std::move(entries));
    if (rank(m) != vs.size()) return false;
  }
  return true;
}

bool is_lsop(const SimplicialComplex& delta, const LsopSystem& theta) {
  return is_lsop(delta, theta.field, theta.forms);
}

LsopSystem generate_lsop(const SimplicialComplex& delta, std::uint64_t seed, const Field& f, int retries) {
  if (delta.is_void()) throw std::invalid_argument("generate_lsop: void complex");
  std::mt19937_64 rng(seed);
  const int d = delta.d();
  const std::vector<int> vs = delta.vertices();
  for (int attempt = 1; attempt <= retries; ++attempt) {
    std::vector<LinearForm> forms(static_cast<std::size_t>(d));
    for (auto& t : forms) {
      t.coeffs.assign(static_cast<std::size_t>(delta.universe_size()), f.zero());
      for (int v : vs) t.coeffs[static_cast<std::size_t>(v)] = f.random(rng);
    }
    if (is_lsop(delta, f, forms)) return LsopSystem{f, std::move(forms), seed, attempt};
  }
  throw GenericityError("no linear system of parameters found over " + f.name() + " after " +
                        std::to_string(retries) + " draws (seed " + std::to_string(seed) + ")");
}

AlgebraEngine::AlgebraEngine(std::shared_ptr<const StanleyReisnerRing> ring, LsopSystem theta)
    : ring_(std::move(ring)), theta_(std::move(theta)) {
  if (!is_lsop(ring_->complex(), theta_)) throw std::invalid_argument("AlgebraEngine: Θ is not an l.s.o.p.");
}

AlgebraEngine::AlgebraEngine(const SimplicialComplex& delta, LsopSystem theta)
    : AlgebraEngine(std::make_shared<const StanleyReisnerRing>(delta), std::move(theta)) {}

const FieldMatrix& AlgebraEngine::mult(int j, int i) const {
  if (j < 1 || j > d()) throw std::out_of_range("form index out of range");
  {
    const std::lock_guard<std::mutex> lock(mutex_);
    const auto it = mults_.find({j, i});
    if (it != mults_.end()) return *it->second;
  }
  auto m = std::make_unique<FieldMatrix>(ring_->mult_matrix(field(), theta_.theta(j), i));
  const std::lock_guard<std::mutex> lock(mutex_);
  auto& slot = mults_[{j, i}];
  if (!slot) slot = std::move(m);
  return *slot;
}

const Subspace& AlgebraEngine::ideal_slice(FormMask mask, int i) const {
  {
    const std::lock_guard<std::mutex> lock(mutex_);
    const auto it = slices_.find({mask, i});
    if (it != slices_.end()) return *it->second;
  }
  std::vector<SparseVector> gens;
  if (i >= 1) {
    for (int j = 1; j <= d(); ++j) {
      if (((mask >> (j - 1)) & 1U) == 0) continue;
      const FieldMatrix columns = mult(j, i - 1).transpose();
      for (const auto& c : columns.row_data())
        if (!c.empty()) gens.push_back(c);
    }
  }
  auto s = std::make_unique<Subspace>(Subspace::span(field(), dim(i), gens));
  const std::lock_guard<std::mutex> lock(mutex_);
  auto& slot = slices_[{mask, i}];
  if (!slot) slot = std::move(s);
  return *slot;
}

QuotientSlice AlgebraEngine::colon(FormMask s, int j, int i) const {
  const Subspace& target = ideal_slice(s, i + 1);
  return QuotientSlice{preimage_of_subspace(mult(j, i), target), ideal_slice(s, i)};
}

std::int64_t AlgebraEngine::h_alg(int i) const {
  if (i < 0) return 0;
  return static_cast<std::int64_t>(dim(i)) - static_cast<std::int64_t>(ideal_slice(prefix_mask(d()), i).dim());
}

std::vector<std::int64_t> AlgebraEngine::h_alg() const {
  std::vector<std::int64_t> h;
  for (int i = 0; i <= d(); ++i) h.push_back(h_alg(i));
  return h;
}

QuotientSlice AlgebraEngine::kernel_K0(int j, int i) const {
  if (j < 1 || j > d()) throw std::out_of_range("kernel_K0: j must lie in 1..d");
  if (i < 0) return QuotientSlice{Subspace(field(), 0), Subspace(field(), 0)};
  return colon(prefix_mask(j - 1), j, i);
}

std::vector<std::int64_t> h_alg(const SimplicialComplex& delta, const LsopSystem& theta) {
  return AlgebraEngine(delta, theta).h_alg();
}

bool HilbertDecompositionReport::ok() const {
  return std::all_of(residual.begin(), residual.end(), [](std::int64_t r) { return r == 0; });
}

HilbertDecompositionReport hilbert_decomposition_check(const AlgebraEngine& engine) {
  HilbertDecompositionReport r;
  const int d = engine.d();
  const int top = d + 1;
  const std::size_t len = static_cast<std::size_t>(2 * d + 3);
  r.lhs.assign(len, 0);
  r.rhs.assign(len, 0);
  for (int i = 0; i <= top; ++i) r.lhs[static_cast<std::size_t>(i)] = engine.h_alg(i);
  const std::vector<std::int64_t> h = engine.complex().h_vector();
  for (std::size_t i = 0; i < h.size(); ++i) r.rhs[i] += h[i];
  for (int j = 1; j <= d; ++j) {
    std::vector<std::int64_t> k(static_cast<std::size_t>(top + 1), 0);
    for (int i = 0; i <= top; ++i) k[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(engine.kernel_K0(j, i).dim());
    // (1-t)^{d-j} t Hilb(K⁰(j), t)
    std::vector<std::int64_t> poly(1, 0);
    poly.insert(poly.end(), k.begin(), k.end());
    for (int e = 0; e < d - j; ++e) {
      std::vector<std::int64_t> next(poly.size() + 1, 0);
      for (std::size_t q = 0; q < poly.size(); ++q) {
        next[q] += poly[q];
        next[q + 1] -= poly[q];
      }
      poly = std::move(next);
    }
    for (std::size_t q = 0; q < poly.size() && q < len; ++q) r.rhs[q] += poly[q];
    r.kernels.push_back(std::move(k));
  }
  for (std::size_t q = 0; q < len; ++q) r.residual.push_back(r.lhs[q] - r.rhs[q]);
  return r;
}

GuardResult genericity_guard(const SimplicialComplex& delta, const std::vector<LsopSystem>& systems,
                             const DimensionComputation& computation) {
  if (systems.size() < 2) throw std::invalid_argument("genericity_guard needs at least two systems");
  GuardResult g;
  for (const auto& s : systems) {
    if (!is_lsop(delta, s)) throw std::invalid_argument("genericity_guard: input is not an l.s.o.p.");
    g.seeds.push_back(s.seed);
  }
  for (const auto& s : systems) g.per_seed.push_back(computation(s));
  g.values = g.per_seed.front();
  for (const auto& v : g.per_seed) {
    if (v.size() != g.values.size()) throw std::invalid_argument("genericity_guard: result lengths differ");
    if (v != g.per_seed.front()) g.stable = false;
    for (std::size_t k = 0; k < v.size(); ++k) g.values[k] = std::min(g.values[k], v[k]);
  }
  return g;
}

GuardResult genericity_guard(const SimplicialComplex& delta, const Field& f, const std::vector<std::uint64_t>& seeds,
                             const DimensionComputation& computation) {
  std::vector<LsopSystem> systems;
  for (std::uint64_t s : seeds) systems.push_back(generate_lsop(delta, s, f));
  return genericity_guard(delta, systems, computation);
}

}  // namespace hvec
