#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hvec/complex.hpp"
#include "hvec/field.hpp"
#include "hvec/linalg.hpp"

namespace hvec {

/// x^α stored by support: sorted (vertex, exponent) pairs with positive exponents.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::pair<int, int>> terms);

  const std::vector<std::pair<int, int>>& terms() const noexcept { return terms_; }
  int degree() const noexcept { return degree_; }
  Face support() const noexcept { return support_; }
  int exponent(int v) const noexcept;
  Monomial times_variable(int v) const;
  /// Packed exponents, 4 bits per vertex; unique for degree ≤ 15.
  unsigned __int128 key() const noexcept { return key_; }
  std::string to_string(const std::vector<std::string>& names) const;

  bool operator==(const Monomial& o) const noexcept { return key_ == o.key_; }

 private:
  std::vector<std::pair<int, int>> terms_;
  int degree_ = 0;
  Face support_;
  unsigned __int128 key_ = 0;
};

/// Lexicographic order with vertex 0 largest: x_0^2 before x_0 x_1 before x_1^2.
bool lex_greater(const Monomial& a, const Monomial& b) noexcept;

/// Monomials of 𝕜[Δ]_i: degree i with support a face, in lexicographic order.
class MonomialBasis {
 public:
  MonomialBasis(const SimplicialComplex& delta, int degree);

  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  /// Position of a monomial, or -1.
  int index_of(const Monomial& m) const;

 private:
  int degree_;
  std::vector<Monomial> monomials_;
  std::map<unsigned __int128, int> index_;
};

/// A linear form Σ θ[v] x_v, indexed by the complex's vertex indices.
struct LinearForm {
  std::vector<Scalar> coeffs;

  Scalar operator[](int v) const { return coeffs[static_cast<std::size_t>(v)]; }
  bool operator==(const LinearForm& o) const = default;
};

LinearForm variable_form(const SimplicialComplex& delta, const Field& f, int v);

/// Graded pieces of the Stanley–Reisner ring with memoized bases.
///
/// Safe to share between threads; bases and multiplication tables are built
/// once per degree.
class StanleyReisnerRing {
 public:
  static constexpr int kMaxDegree = 15;

  explicit StanleyReisnerRing(SimplicialComplex delta);
  StanleyReisnerRing(const StanleyReisnerRing&) = delete;
  StanleyReisnerRing& operator=(const StanleyReisnerRing&) = delete;

  const SimplicialComplex& complex() const noexcept { return delta_; }
  const MonomialBasis& basis(int i) const;
  std::size_t dim(int i) const { return i < 0 ? 0 : basis(i).size(); }
  /// table[m] = index of x_v·m in degree i+1, or -1 when its support is not a face.
  const std::vector<int>& variable_multiplication(int v, int i) const;
  /// θ·m for the m-th monomial of degree i.
  SparseVector multiply(const Field& f, const LinearForm& theta, int i, std::size_t m) const;
  /// θ·b for b in degree i.
  SparseVector multiply(const Field& f, const LinearForm& theta, int i, const SparseVector& b) const;
  /// ·θ : 𝕜[Δ]_i → 𝕜[Δ]_{i+1} in monomial coordinates.
  FieldMatrix mult_matrix(const Field& f, const LinearForm& theta, int i) const;

 private:
  SimplicialComplex delta_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::unique_ptr<MonomialBasis>> bases_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<std::vector<int>>> tables_;
};

MonomialBasis monomial_basis(const SimplicialComplex& delta, int i);
FieldMatrix mult_matrix(const SimplicialComplex& delta, const Field& f, const LinearForm& theta, int i);

/// dim 𝕜[Δ]_i from faces: 1 at i = 0, Σ_{∅≠F} C(i-1, |F|-1) otherwise.
std::int64_t hilbert_function(const SimplicialComplex& delta, int i);

struct HilbertSeriesReport {
  std::vector<std::int64_t> counted;   // basis sizes, degrees 0..up_to
  std::vector<std::int64_t> expected;  // coefficients of h(t)/(1-t)^d
  int first_failure = -1;
  bool ok() const noexcept { return first_failure < 0; }
};

/// Compares monomial counts with the series Σ h_i t^i / (1-t)^d through degree up_to.
HilbertSeriesReport hilbert_series_check(const SimplicialComplex& delta, int up_to);

}  // namespace hvec
