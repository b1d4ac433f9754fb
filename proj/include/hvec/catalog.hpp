#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hvec/complex.hpp"

namespace hvec {

/// Primes for which a module property holds.
enum class Over { None, All, OddOnly };

inline bool holds_over(Over o, std::uint64_t p) { return o == Over::All || (o == Over::OddOnly && p != 2); }

struct CatalogEntry {
  std::string name;
  SimplicialComplex complex;
  bool pure = true;
  Over cohen_macaulay = Over::None;
  Over buchsbaum = Over::None;

  bool cohen_macaulay_over(std::uint64_t p) const { return holds_over(cohen_macaulay, p); }
  bool buchsbaum_over(std::uint64_t p) const { return holds_over(buchsbaum, p); }
};

const std::vector<CatalogEntry>& catalog();
/// Throws std::out_of_range for an unknown name.
const CatalogEntry& catalog_entry(const std::string& name);

SimplicialComplex rp2_6();
SimplicialComplex torus_7();
SimplicialComplex cycle(int n);

constexpr int kRandomVertexCap = 12;

/// Downward closure of a sample in which every subset of {1..n} with 1..dim+1
/// elements is drawn independently with probability `density`.
SimplicialComplex random_complex(int n, int dim, double density, std::uint64_t seed);
/// Exactly `count` distinct (dim+1)-subsets of {1..n}, uniformly.
SimplicialComplex random_pure_complex(int n, int dim, int count, std::uint64_t seed);

}  // namespace hvec
