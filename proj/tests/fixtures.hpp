#pragma once

#include <random>
#include <string>
#include <vector>

#include "hvec/complex.hpp"

namespace fixture {

/// Single-character vertex names: named({"abc", "cde"}).
inline hvec::SimplicialComplex named(const std::vector<std::string>& facets) {
  std::vector<std::vector<std::string>> out;
  for (const auto& f : facets) {
    std::vector<std::string> v;
    for (char c : f) v.emplace_back(1, c);
    out.push_back(v);
  }
  return hvec::SimplicialComplex::from_facets(out);
}

inline hvec::SimplicialComplex rp2() {
  return hvec::SimplicialComplex::from_facets(std::vector<std::vector<int>>{
      {1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6}, {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
}

inline hvec::SimplicialComplex torus() {
  std::vector<std::vector<int>> facets;
  for (int i = 0; i < 7; ++i) {
    facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
    facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return hvec::SimplicialComplex::from_facets(facets);
}

inline hvec::SimplicialComplex bowtie() { return named({"abc", "cde"}); }

/// Downward closure of random subsets of {0..n-1}, 2 <= n <= max_n.
inline hvec::SimplicialComplex random_small(std::mt19937_64& rng, int max_n = 8) {
  const int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_n - 1));
  const int count = 1 + static_cast<int>(rng() % 8);
  std::vector<hvec::Face> gens;
  for (int i = 0; i < count; ++i) gens.emplace_back(static_cast<hvec::VertexMask>(rng() % (1U << n)));
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return hvec::SimplicialComplex(names, gens);
}

}  // namespace fixture
