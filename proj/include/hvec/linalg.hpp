#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hvec/field.hpp"

namespace hvec {

using Index = std::uint32_t;

/// Sorted (index, value) pairs with no zero values.
using SparseVector = std::vector<std::pair<Index, Scalar>>;

struct Triplet {
  Index row;
  Index col;
  Scalar value;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sorts, merges duplicates and drops zeros.
SparseVector normalize(const Field& f, SparseVector v);
/// a + c*b
SparseVector axpy(const Field& f, const SparseVector& a, Scalar c, const SparseVector& b);
SparseVector scale(const Field& f, const SparseVector& v, Scalar c);
Scalar lookup(const SparseVector& v, Index i);

/// Sparse row-major matrix over a finite field.
class FieldMatrix {
 public:
  FieldMatrix(Field f, std::size_t rows, std::size_t cols);

  static FieldMatrix from_triplets(Field f, std::size_t rows, std::size_t cols, std::vector<Triplet> entries);
  static FieldMatrix from_rows(Field f, std::size_t cols, std::vector<SparseVector> rows);
  static FieldMatrix from_dense(Field f, const std::vector<std::vector<Scalar>>& dense);
  static FieldMatrix identity(Field f, std::size_t n);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const SparseVector& row(std::size_t i) const { return data_.at(i); }
  const std::vector<SparseVector>& row_data() const noexcept { return data_; }
  std::size_t nnz() const noexcept;
  Scalar at(std::size_t i, std::size_t j) const;
  std::vector<Triplet> triplets() const;
  std::vector<std::vector<Scalar>> to_dense() const;

  FieldMatrix transpose() const;
  FieldMatrix operator*(const FieldMatrix& o) const;
  /// Matrix-vector product.
  SparseVector apply(const SparseVector& v) const;
  /// Rows of `a` followed by rows of `b`.
  static FieldMatrix vstack(const FieldMatrix& a, const FieldMatrix& b);

  bool operator==(const FieldMatrix& o) const;
  bool operator!=(const FieldMatrix& o) const { return !(*this == o); }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<SparseVector> data_;
};

/// Rank, using sparse elimination with a Markowitz-style pivot choice.
std::size_t rank(const FieldMatrix& m);
/// Rank of the span of a list of vectors in an `n`-dimensional space.
std::size_t rank_of(const Field& f, std::size_t n, const std::vector<SparseVector>& vectors);

/// A linear subspace of F^n in canonical form.
///
/// The basis is the unique reduced echelon basis whose pivots are the
/// largest indices: every basis row has a 1 in its pivot column, zeros in all
/// other pivot columns, and no entries past the pivot. Two subspaces are equal
/// exactly when their bases are identical.
class Subspace {
 public:
  Subspace(Field f, std::size_t ambient);

  static Subspace span(Field f, std::size_t ambient, const std::vector<SparseVector>& vectors);
  static Subspace full(Field f, std::size_t ambient);

  const Field& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<SparseVector>& basis() const noexcept { return basis_; }
  const std::vector<Index>& pivots() const noexcept { return pivots_; }
  FieldMatrix basis_matrix() const;

  /// v minus its projection along the pivot coordinates; zero iff v lies in the subspace.
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  /// Coordinates of v (assumed to lie in the subspace) in the canonical basis.
  std::vector<Scalar> coordinates(const SparseVector& v) const;
  /// Rows a_1..a_k with V = {x : a_i . x = 0 for all i}.
  FieldMatrix constraints() const;
  /// Non-pivot coordinates, the canonical complement.
  std::vector<Index> free_coordinates() const;

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  friend Subspace kernel_basis(const FieldMatrix&);
  Subspace(Field f, std::size_t ambient, std::vector<SparseVector> canonical_rows);

  Field field_;
  std::size_t ambient_;
  std::vector<SparseVector> basis_;
  std::vector<Index> pivots_;
  std::vector<std::int32_t> pivot_row_;
};

Subspace kernel_basis(const FieldMatrix& m);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);
/// {v : f v in w}
Subspace preimage_of_subspace(const FieldMatrix& f, const Subspace& w);
/// Image of a subspace under a linear map.
Subspace image(const FieldMatrix& f, const Subspace& v);
Subspace column_space(const FieldMatrix& m);

/// A subquotient lifted / base of some ambient space, with base contained in lifted.
struct QuotientSlice {
  Subspace lifted;
  Subspace base;

  std::size_t dim() const noexcept { return lifted.dim() - base.dim(); }
  /// Coordinates of v + base in the quotient of the ambient space by base,
  /// indexed by the free coordinates of base.
  SparseVector quotient_coordinates(const SparseVector& v) const;
};

}  // namespace hvec
