#include "hvec/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace hvec {

SparseVector normalize(const Field& f, SparseVector v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) {
    if (!out.empty() && out.back().first == i) {
      out.back().second = f.add(out.back().second, x);
    } else {
      out.emplace_back(i, x);
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const auto& e) { return e.second == 0; }), out.end());
  return out;
}

SparseVector axpy(const Field& f, const SparseVector& a, Scalar c, const SparseVector& b) {
  if (c == 0) return a;
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, f.mul(c, b[j].second));
      ++j;
    } else {
      const Scalar s = f.fma(a[i].second, c, b[j].second);
      if (s != 0) out.emplace_back(a[i].first, s);
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVector scale(const Field& f, const SparseVector& v, Scalar c) {
  if (c == 0) return {};
  SparseVector out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) out.emplace_back(i, f.mul(c, x));
  return out;
}

Scalar lookup(const SparseVector& v, Index i) {
  auto it = std::lower_bound(v.begin(), v.end(), i, [](const auto& e, Index k) { return e.first < k; });
  return (it != v.end() && it->first == i) ? it->second : 0;
}

// ---------------------------------------------------------------------------
// FieldMatrix

FieldMatrix::FieldMatrix(Field f, std::size_t rows, std::size_t cols)
    : field_(std::move(f)), rows_(rows), cols_(cols), data_(rows) {}

FieldMatrix FieldMatrix::from_triplets(Field f, std::size_t rows, std::size_t cols, std::vector<Triplet> entries) {
  FieldMatrix m(std::move(f), rows, cols);
  for (const Triplet& t : entries) {
    if (t.row >= rows || t.col >= cols) {
      throw DimensionError("triplet (" + std::to_string(t.row) + ", " + std::to_string(t.col) +
                           ") outside a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
    }
    m.data_[t.row].emplace_back(t.col, t.value);
  }
  for (auto& r : m.data_) r = normalize(m.field_, std::move(r));
  return m;
}

FieldMatrix FieldMatrix::from_rows(Field f, std::size_t cols, std::vector<SparseVector> rows) {
  FieldMatrix m(std::move(f), rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& e : rows[i]) {
      if (e.first >= cols) throw DimensionError("row entry index out of range");
    }
    m.data_[i] = normalize(m.field_, std::move(rows[i]));
  }
  return m;
}

FieldMatrix FieldMatrix::from_dense(Field f, const std::vector<std::vector<Scalar>>& dense) {
  const std::size_t cols = dense.empty() ? 0 : dense.front().size();
  FieldMatrix m(std::move(f), dense.size(), cols);
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i].size() != cols) throw DimensionError("ragged dense matrix");
    for (std::size_t j = 0; j < cols; ++j) {
      if (dense[i][j] != 0) m.data_[i].emplace_back(static_cast<Index>(j), dense[i][j]);
    }
  }
  return m;
}

FieldMatrix FieldMatrix::identity(Field f, std::size_t n) {
  FieldMatrix m(std::move(f), n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(static_cast<Index>(i), m.field_.one());
  return m;
}

std::size_t FieldMatrix::nnz() const noexcept {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Scalar FieldMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw DimensionError("matrix index out of range");
  return lookup(data_[i], static_cast<Index>(j));
}

std::vector<Triplet> FieldMatrix::triplets() const {
  std::vector<Triplet> out;
  out.reserve(nnz());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& [j, x] : data_[i]) out.push_back({static_cast<Index>(i), j, x});
  }
  return out;
}

std::vector<std::vector<Scalar>> FieldMatrix::to_dense() const {
  std::vector<std::vector<Scalar>> d(rows_, std::vector<Scalar>(cols_, 0));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& [j, x] : data_[i]) d[i][j] = x;
  }
  return d;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& [j, x] : data_[i]) t.data_[j].emplace_back(static_cast<Index>(i), x);
  }
  return t;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
  if (field_ != o.field_) throw DimensionError("matrix product over different fields");
  FieldMatrix out(field_, rows_, o.cols_);
  std::vector<Scalar> acc(o.cols_, 0);
  std::vector<char> seen(o.cols_, 0);
  std::vector<Index> touched;
  for (std::size_t i = 0; i < rows_; ++i) {
    touched.clear();
    for (const auto& [k, a] : data_[i]) {
      for (const auto& [j, b] : o.data_[k]) {
        if (seen[j] == 0) {
          seen[j] = 1;
          touched.push_back(j);
        }
        acc[j] = field_.fma(acc[j], a, b);
      }
    }
    std::sort(touched.begin(), touched.end());
    for (Index j : touched) {
      if (acc[j] != 0) out.data_[i].emplace_back(j, acc[j]);
      acc[j] = 0;
      seen[j] = 0;
    }
  }
  return out;
}

SparseVector FieldMatrix::apply(const SparseVector& v) const {
  std::vector<Scalar> dense(cols_, 0);
  for (const auto& [j, x] : v) {
    if (j >= cols_) throw DimensionError("vector length exceeds matrix columns");
    dense[j] = x;
  }
  SparseVector out;
  for (std::size_t i = 0; i < rows_; ++i) {
    Scalar s = 0;
    for (const auto& [j, a] : data_[i]) s = field_.fma(s, a, dense[j]);
    if (s != 0) out.emplace_back(static_cast<Index>(i), s);
  }
  return out;
}

FieldMatrix FieldMatrix::vstack(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols_ != b.cols_) throw DimensionError("vstack column mismatch");
  FieldMatrix out(a.field_, a.rows_ + b.rows_, a.cols_);
  std::copy(a.data_.begin(), a.data_.end(), out.data_.begin());
  std::copy(b.data_.begin(), b.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(a.rows_));
  return out;
}

bool FieldMatrix::operator==(const FieldMatrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

// ---------------------------------------------------------------------------
// Incremental Gauss-Jordan elimination.
//
// Pivot rows are kept fully reduced against each other, so reducing a new
// vector is a single pass over its pivot-column entries.

namespace {

enum class PivotRule { Markowitz, Leading, Trailing };

class Eliminator {
 public:
  Eliminator(const Field& f, std::size_t n, PivotRule rule)
      : f_(f), n_(n), rule_(rule), pivot_row_(n, -1), col_rows_(n), acc_(n, 0), seen_(n, 0) {}

  bool insert(const SparseVector& v) {
    SparseVector r = reduce(v);
    if (r.empty()) return false;
    const Index pc = choose(r);
    const Scalar s = f_.inv(lookup(r, pc));
    r = scale(f_, r, s);
    const auto idx = static_cast<std::int32_t>(rows_.size());
    for (std::int32_t other : col_rows_[pc]) {
      SparseVector& row = rows_[static_cast<std::size_t>(other)];
      const Scalar x = lookup(row, pc);
      if (x == 0) continue;
      SparseVector updated = axpy(f_, row, f_.neg(x), r);
      index_new_entries(row, updated, other);
      row = std::move(updated);
    }
    col_rows_[pc].clear();
    for (const auto& e : r) col_rows_[e.first].push_back(idx);
    pivot_row_[pc] = idx;
    pivots_.push_back(pc);
    rows_.push_back(std::move(r));
    return true;
  }

  SparseVector reduce(const SparseVector& v) {
    touched_.clear();
    for (const auto& [i, x] : v) touch(i, x);
    for (const auto& [i, x] : v) {
      const std::int32_t pr = pivot_row_[i];
      if (pr < 0) continue;
      const Scalar c = f_.neg(x);
      for (const auto& [j, y] : rows_[static_cast<std::size_t>(pr)]) touch(j, f_.mul(c, y));
    }
    std::sort(touched_.begin(), touched_.end());
    SparseVector out;
    for (Index j : touched_) {
      if (acc_[j] != 0) out.emplace_back(j, acc_[j]);
      acc_[j] = 0;
      seen_[j] = 0;
    }
    return out;
  }

  std::size_t rank() const noexcept { return rows_.size(); }
  std::vector<SparseVector>& rows() noexcept { return rows_; }
  const std::vector<Index>& pivots() const noexcept { return pivots_; }
  const std::vector<std::int32_t>& pivot_row() const noexcept { return pivot_row_; }

 private:
  void touch(Index j, Scalar x) {
    if (seen_[j] == 0) {
      seen_[j] = 1;
      touched_.push_back(j);
    }
    acc_[j] = f_.add(acc_[j], x);
  }

  Index choose(const SparseVector& r) const {
    switch (rule_) {
      case PivotRule::Leading:
        return r.front().first;
      case PivotRule::Trailing:
        return r.back().first;
      case PivotRule::Markowitz:
        break;
    }
    Index best = r.front().first;
    std::size_t best_count = col_rows_[best].size();
    for (const auto& e : r) {
      const std::size_t c = col_rows_[e.first].size();
      if (c < best_count) {
        best = e.first;
        best_count = c;
      }
    }
    return best;
  }

  void index_new_entries(const SparseVector& before, const SparseVector& after, std::int32_t row) {
    std::size_t i = 0;
    for (const auto& e : after) {
      while (i < before.size() && before[i].first < e.first) ++i;
      if (i < before.size() && before[i].first == e.first) continue;
      col_rows_[e.first].push_back(row);
    }
  }

  const Field& f_;
  std::size_t n_;
  PivotRule rule_;
  std::vector<SparseVector> rows_;
  std::vector<Index> pivots_;
  std::vector<std::int32_t> pivot_row_;
  std::vector<std::vector<std::int32_t>> col_rows_;
  std::vector<Scalar> acc_;
  std::vector<char> seen_;
  std::vector<Index> touched_;
};

std::vector<std::size_t> sparsest_first(const std::vector<SparseVector>& rows) {
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rows[a].size() < rows[b].size(); });
  return order;
}

void check_vectors(std::size_t n, const std::vector<SparseVector>& vectors) {
  for (const auto& v : vectors) {
    if (!v.empty() && v.back().first >= n) throw DimensionError("vector index outside ambient space");
  }
}

}  // namespace

std::size_t rank_of(const Field& f, std::size_t n, const std::vector<SparseVector>& vectors) {
  check_vectors(n, vectors);
  Eliminator e(f, n, PivotRule::Markowitz);
  for (std::size_t i : sparsest_first(vectors)) {
    e.insert(vectors[i]);
    if (e.rank() == n) break;
  }
  return e.rank();
}

std::size_t rank(const FieldMatrix& m) {
  if (m.rows() <= m.cols()) return rank_of(m.field(), m.cols(), m.row_data());
  const FieldMatrix t = m.transpose();
  return rank_of(t.field(), t.cols(), t.row_data());
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(Field f, std::size_t ambient) : field_(std::move(f)), ambient_(ambient), pivot_row_(ambient, -1) {}

Subspace::Subspace(Field f, std::size_t ambient, std::vector<SparseVector> canonical_rows)
    : field_(std::move(f)), ambient_(ambient), basis_(std::move(canonical_rows)), pivot_row_(ambient, -1) {
  std::sort(basis_.begin(), basis_.end(), [](const auto& a, const auto& b) { return a.back().first < b.back().first; });
  pivots_.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    pivots_.push_back(basis_[i].back().first);
    pivot_row_[basis_[i].back().first] = static_cast<std::int32_t>(i);
  }
}

Subspace Subspace::span(Field f, std::size_t ambient, const std::vector<SparseVector>& vectors) {
  check_vectors(ambient, vectors);
  Eliminator e(f, ambient, PivotRule::Trailing);
  for (std::size_t i : sparsest_first(vectors)) {
    e.insert(vectors[i]);
    if (e.rank() == ambient) break;
  }
  return Subspace(std::move(f), ambient, std::move(e.rows()));
}

Subspace Subspace::full(Field f, std::size_t ambient) {
  std::vector<SparseVector> rows(ambient);
  for (std::size_t i = 0; i < ambient; ++i) rows[i] = {{static_cast<Index>(i), f.one()}};
  return Subspace(std::move(f), ambient, std::move(rows));
}

FieldMatrix Subspace::basis_matrix() const { return FieldMatrix::from_rows(field_, ambient_, basis_); }

SparseVector Subspace::reduce(const SparseVector& v) const {
  if (!v.empty() && v.back().first >= ambient_) throw DimensionError("vector outside ambient space");
  SparseVector out = v;
  for (const auto& [i, x] : v) {
    const std::int32_t r = pivot_row_[i];
    if (r < 0) continue;
    out = axpy(field_, out, field_.neg(x), basis_[static_cast<std::size_t>(r)]);
  }
  return out;
}

std::vector<Scalar> Subspace::coordinates(const SparseVector& v) const {
  std::vector<Scalar> c(basis_.size(), 0);
  for (const auto& [i, x] : v) {
    const std::int32_t r = pivot_row_.at(i);
    if (r >= 0) c[static_cast<std::size_t>(r)] = x;
  }
  return c;
}

std::vector<Index> Subspace::free_coordinates() const {
  std::vector<Index> out;
  out.reserve(ambient_ - basis_.size());
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (pivot_row_[i] < 0) out.push_back(static_cast<Index>(i));
  }
  return out;
}

FieldMatrix Subspace::constraints() const {
  // For each free coordinate f: e_f - sum_R R[f] e_{pivot(R)}.
  std::vector<SparseVector> rows(ambient_);
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Index p = pivots_[r];
    for (const auto& [j, x] : basis_[r]) {
      if (j != p) rows[j].emplace_back(p, field_.neg(x));
    }
  }
  std::vector<SparseVector> out;
  out.reserve(ambient_ - basis_.size());
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (pivot_row_[j] >= 0) continue;
    SparseVector a = std::move(rows[j]);
    a.emplace_back(static_cast<Index>(j), field_.one());
    out.push_back(normalize(field_, std::move(a)));
  }
  return FieldMatrix::from_rows(field_, ambient_, std::move(out));
}

bool Subspace::operator==(const Subspace& o) const {
  return field_ == o.field_ && ambient_ == o.ambient_ && basis_ == o.basis_;
}

// ---------------------------------------------------------------------------

Subspace kernel_basis(const FieldMatrix& m) {
  const std::size_t n = m.cols();
  Eliminator e(m.field(), n, PivotRule::Leading);
  for (std::size_t i : sparsest_first(m.row_data())) {
    e.insert(m.row(i));
    if (e.rank() == n) break;
  }
  // Leading-pivot RREF R; kernel vector for free column f is
  // e_f - sum_R R[f] e_{pivot(R)}, whose largest index is f.
  std::vector<SparseVector> by_col(n);
  const auto& rows = e.rows();
  const auto& piv = e.pivots();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [j, x] : rows[r]) {
      if (j != piv[r]) by_col[j].emplace_back(piv[r], m.field().neg(x));
    }
  }
  std::vector<SparseVector> basis;
  basis.reserve(n - rows.size());
  for (std::size_t j = 0; j < n; ++j) {
    if (e.pivot_row()[j] >= 0) continue;
    SparseVector v = std::move(by_col[j]);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    v.emplace_back(static_cast<Index>(j), m.field().one());
    basis.push_back(std::move(v));
  }
  return Subspace(m.field(), n, std::move(basis));
}

namespace {
void require_compatible(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspaces live in different ambient spaces");
  if (a.field() != b.field()) throw DimensionError("subspaces over different fields");
}
}  // namespace

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  if (b.dim() == 0) return a;
  if (a.dim() == 0) return b;
  std::vector<SparseVector> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.field(), a.ambient_dim(), rows);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  if (a.dim() == a.ambient_dim()) return b;
  if (b.dim() == b.ambient_dim()) return a;
  return kernel_basis(FieldMatrix::vstack(a.constraints(), b.constraints()));
}

Subspace preimage_of_subspace(const FieldMatrix& f, const Subspace& w) {
  if (f.rows() != w.ambient_dim()) throw DimensionError("preimage: map codomain does not match subspace ambient");
  if (f.field() != w.field()) throw DimensionError("preimage over different fields");
  if (w.dim() == w.ambient_dim()) return Subspace::full(f.field(), f.cols());
  return kernel_basis(w.constraints() * f);
}

Subspace image(const FieldMatrix& f, const Subspace& v) {
  if (f.cols() != v.ambient_dim()) throw DimensionError("image: map domain does not match subspace ambient");
  std::vector<SparseVector> imgs;
  imgs.reserve(v.dim());
  for (const auto& b : v.basis()) imgs.push_back(f.apply(b));
  return Subspace::span(f.field(), f.rows(), imgs);
}

Subspace column_space(const FieldMatrix& m) {
  const FieldMatrix t = m.transpose();
  return Subspace::span(m.field(), m.rows(), t.row_data());
}

SparseVector QuotientSlice::quotient_coordinates(const SparseVector& v) const {
  const SparseVector r = base.reduce(v);
  const std::vector<Index> free = base.free_coordinates();
  SparseVector out;
  out.reserve(r.size());
  for (const auto& [i, x] : r) {
    const auto it = std::lower_bound(free.begin(), free.end(), i);
    out.emplace_back(static_cast<Index>(it - free.begin()), x);
  }
  return out;
}

}  // namespace hvec
