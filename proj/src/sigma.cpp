#include "hvec/sigma.hpp"

#include <algorithm>

namespace hvec {

namespace {

void check_form(const AlgebraEngine& e, int j) {
  if (j < 1 || j > e.d()) throw std::out_of_range("form index out of range");
}

// {m ∈ 𝕜[Δ]_i : θ_j^n m ∈ (S)_{i+n}}
Subspace power_preimage(const AlgebraEngine& e, FormMask s, int j, int i, int n) {
  Subspace w = e.ideal_slice(s, i + n);
  for (int k = i + n - 1; k >= i; --k) w = preimage_of_subspace(e.mult(j, k), w);
  return w;
}

Subspace sum_all(const Field& f, std::size_t n, const std::vector<const Subspace*>& parts) {
  std::vector<SparseVector> gens;
  for (const Subspace* p : parts) gens.insert(gens.end(), p->basis().begin(), p->basis().end());
  return Subspace::span(f, n, gens);
}

}  // namespace

Subspace colon_kernel(const AlgebraEngine& e, int j, int i) {
  check_form(e, j);
  if (i < 0) return Subspace(e.field(), 0);
  return e.colon(hat_mask(e.d(), j), j, i).lifted;
}

Subspace sigma_slice(const AlgebraEngine& e, int i) {
  if (i < 0) return Subspace(e.field(), 0);
  std::vector<Subspace> colons;
  for (int j = 1; j <= e.d(); ++j) colons.push_back(colon_kernel(e, j, i));
  std::vector<const Subspace*> parts = {&e.ideal_slice(prefix_mask(e.d()), i)};
  for (const auto& c : colons) parts.push_back(&c);
  return sum_all(e.field(), e.dim(i), parts);
}

std::int64_t h_sigma(const AlgebraEngine& e, int i) {
  if (i < 0) return 0;
  return static_cast<std::int64_t>(e.dim(i)) - static_cast<std::int64_t>(sigma_slice(e, i).dim());
}

std::vector<std::int64_t> h_sigma(const AlgebraEngine& e) {
  std::vector<std::int64_t> h;
  for (int i = 0; i <= e.d(); ++i) h.push_back(h_sigma(e, i));
  return h;
}

Saturation saturation_kernel(const AlgebraEngine& e, FormMask s, int j, int i) {
  check_form(e, j);
  if (((s >> (j - 1)) & 1U) != 0) throw std::invalid_argument("saturation_kernel: θ_j lies in S");
  if (i < 0) return Saturation{QuotientSlice{Subspace(e.field(), 0), Subspace(e.field(), 0)}, 0};
  const int cap = e.d() + 2;
  int n = std::max(1, e.d() - i);
  Subspace current = power_preimage(e, s, j, i, n);
  while (n < cap) {
    Subspace next = power_preimage(e, s, j, i, n + 1);
    if (next == current) return Saturation{QuotientSlice{std::move(current), e.ideal_slice(s, i)}, n};
    current = std::move(next);
    ++n;
  }
  throw SaturationError("θ-power kernels did not stabilize by exponent " + std::to_string(cap) + " in degree " +
                        std::to_string(i));
}

Subspace tau_slice(const AlgebraEngine& e, int i) {
  if (i < 0) return Subspace(e.field(), 0);
  std::vector<Subspace> lifts;
  for (int j = 1; j <= e.d(); ++j) lifts.push_back(saturation_kernel(e, hat_mask(e.d(), j), j, i).kernel.lifted);
  std::vector<const Subspace*> parts = {&e.ideal_slice(prefix_mask(e.d()), i)};
  for (const auto& l : lifts) parts.push_back(&l);
  return sum_all(e.field(), e.dim(i), parts);
}

std::int64_t h_tau(const AlgebraEngine& e, int i) {
  if (i < 0) return 0;
  return static_cast<std::int64_t>(e.dim(i)) - static_cast<std::int64_t>(tau_slice(e, i).dim());
}

std::vector<std::int64_t> h_tau(const AlgebraEngine& e) {
  std::vector<std::int64_t> h;
  for (int i = 0; i <= e.d(); ++i) h.push_back(h_tau(e, i));
  return h;
}

}  // namespace hvec
