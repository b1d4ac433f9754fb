#include "hvec/catalog.hpp"

#include <bit>
#include <random>
#include <stdexcept>

namespace hvec {

SimplicialComplex rp2_6() {
  return SimplicialComplex::from_facets(std::vector<std::vector<int>>{
      {1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6}, {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
}

SimplicialComplex torus_7() {
  std::vector<std::vector<int>> facets;
  for (int i = 0; i < 7; ++i) {
    facets.push_back({i + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1});
    facets.push_back({i + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1});
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::vector<int>> facets;
  for (int i = 0; i < n; ++i) facets.push_back({i + 1, (i + 1) % n + 1});
  return SimplicialComplex::from_facets(facets);
}

namespace {

using L = std::vector<std::vector<std::string>>;

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  auto add = [&c](std::string name, SimplicialComplex x, Over cm, Over b) {
    const bool pure = x.is_pure();
    c.push_back({std::move(name), std::move(x), pure, cm, b});
  };
  add("empty", SimplicialComplex::empty_complex(), Over::All, Over::All);
  add("single_vertex", SimplicialComplex::simplex(1), Over::All, Over::All);
  add("s0", SimplicialComplex::boundary_simplex(1), Over::All, Over::All);
  for (int d = 2; d <= 5; ++d)
    add("boundary_simplex_" + std::to_string(d), SimplicialComplex::boundary_simplex(d), Over::All, Over::All);
  for (int n = 4; n <= 6; ++n) add("cycle_" + std::to_string(n), cycle(n), Over::All, Over::All);
  add("rp2_6", rp2_6(), Over::OddOnly, Over::All);
  add("torus_7", torus_7(), Over::None, Over::All);
  add("bowtie", SimplicialComplex::from_facets(L{{"a", "b", "c"}, {"c", "d", "e"}}), Over::None, Over::None);
  add("disjoint_edges", SimplicialComplex::from_facets(L{{"a", "b"}, {"c", "d"}}), Over::None, Over::All);
  add("triangle", SimplicialComplex::simplex(3), Over::All, Over::All);

  // cone and suspension of every 2-dimensional member
  const std::size_t base = c.size();
  for (std::size_t k = 0; k < base; ++k) {
    const CatalogEntry e = c[k];
    if (e.complex.dimension() != 2) continue;
    add("cone_" + e.name, e.complex.cone(), e.cohen_macaulay, e.cohen_macaulay);
    add("susp_" + e.name, e.complex.suspension(), e.cohen_macaulay, e.cohen_macaulay);
  }
  return c;
}

// uniform in [0, 1)
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11U) * 0x1.0p-53; }

void check_random_args(int n, int dim) {
  if (n < 1 || n > kRandomVertexCap)
    throw std::invalid_argument("random complex: n must lie in 1.." + std::to_string(kRandomVertexCap));
  if (dim < 0 || dim > n - 1) throw std::invalid_argument("random complex: dim must lie in 0..n-1");
}

SimplicialComplex from_masks(const std::vector<std::uint32_t>& masks) {
  std::vector<std::vector<int>> facets;
  for (std::uint32_t m : masks) {
    std::vector<int> f;
    for (int v = 0; v < 32; ++v)
      if ((m >> v) & 1U) f.push_back(v + 1);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(facets);
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> c = build_catalog();
  return c;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw std::out_of_range("unknown catalog complex '" + name + "'");
}

SimplicialComplex random_complex(int n, int dim, double density, std::uint64_t seed) {
  check_random_args(n, dim);
  if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("random complex: density must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> picked;
  for (std::uint32_t m = 1; m < (1U << n); ++m) {
    if (std::popcount(m) > dim + 1) continue;
    if (unit(rng) < density) picked.push_back(m);
  }
  if (picked.empty()) throw std::invalid_argument("random complex: empty sample");
  return from_masks(picked);
}

SimplicialComplex random_pure_complex(int n, int dim, int count, std::uint64_t seed) {
  check_random_args(n, dim);
  std::vector<std::uint32_t> all;
  for (std::uint32_t m = 1; m < (1U << n); ++m)
    if (std::popcount(m) == dim + 1) all.push_back(m);
  if (count < 1 || static_cast<std::size_t>(count) > all.size())
    throw std::invalid_argument("random pure complex: count must lie in 1.." + std::to_string(all.size()));
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < static_cast<std::size_t>(count); ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (all.size() - i));
    std::swap(all[i], all[j]);
  }
  all.resize(static_cast<std::size_t>(count));
  return from_masks(all);
}

}  // namespace hvec
