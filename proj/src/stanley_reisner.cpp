#include "hvec/stanley_reisner.hpp"

#include <algorithm>
#include <stdexcept>

namespace hvec {

Monomial::Monomial(std::vector<std::pair<int, int>> terms) : terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end());
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto [v, e] = terms_[k];
    if (e <= 0 || v < 0 || v >= kMaxVertices || (k > 0 && terms_[k - 1].first == v))
      throw std::invalid_argument("malformed monomial");
    degree_ += e;
    support_ = support_ | Face::vertex(v);
    key_ |= static_cast<unsigned __int128>(e) << (4 * v);
  }
  if (degree_ > StanleyReisnerRing::kMaxDegree) throw std::invalid_argument("monomial degree above 15");
}

int Monomial::exponent(int v) const noexcept {
  for (const auto& [u, e] : terms_)
    if (u == v) return e;
  return 0;
}

Monomial Monomial::times_variable(int v) const {
  std::vector<std::pair<int, int>> t = terms_;
  auto it = std::lower_bound(t.begin(), t.end(), std::make_pair(v, 0));
  if (it != t.end() && it->first == v)
    ++it->second;
  else
    t.insert(it, {v, 1});
  return Monomial(std::move(t));
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : terms_) {
    if (!s.empty()) s += "*";
    s += "x_" + names[static_cast<std::size_t>(v)];
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

bool lex_greater(const Monomial& a, const Monomial& b) noexcept {
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    const int vx = i < x.size() ? x[i].first : kMaxVertices;
    const int vy = j < y.size() ? y[j].first : kMaxVertices;
    const int v = std::min(vx, vy);
    const int ex = vx == v ? x[i].second : 0;
    const int ey = vy == v ? y[j].second : 0;
    if (ex != ey) return ex > ey;
    if (vx == v) ++i;
    if (vy == v) ++j;
  }
  return false;
}

MonomialBasis::MonomialBasis(const SimplicialComplex& delta, int degree) : degree_(degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  if (degree > StanleyReisnerRing::kMaxDegree) throw std::invalid_argument("degree above 15");
  if (delta.is_void()) return;
  if (degree == 0) {
    monomials_.emplace_back();
  } else {
    for (Face f : delta.faces()) {
      const int k = f.size();
      if (k == 0 || k > degree) continue;
      const std::vector<int> vs = f.vertices();
      std::vector<int> e(static_cast<std::size_t>(k), 1);
      // positive compositions of degree into k parts
      auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
        if (pos + 1 == e.size()) {
          e[pos] = left;
          std::vector<std::pair<int, int>> t;
          for (std::size_t q = 0; q < e.size(); ++q) t.emplace_back(vs[q], e[q]);
          monomials_.emplace_back(std::move(t));
          return;
        }
        const int rest = static_cast<int>(e.size() - pos - 1);
        for (int x = 1; x <= left - rest; ++x) {
          e[pos] = x;
          self(self, pos + 1, left - x);
        }
      };
      rec(rec, 0, degree);
    }
    std::sort(monomials_.begin(), monomials_.end(), lex_greater);
  }
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i].key(), static_cast<int>(i));
}

int MonomialBasis::index_of(const Monomial& m) const {
  const auto it = index_.find(m.key());
  return it == index_.end() ? -1 : it->second;
}

LinearForm variable_form(const SimplicialComplex& delta, const Field& f, int v) {
  LinearForm t{std::vector<Scalar>(static_cast<std::size_t>(delta.universe_size()), f.zero())};
  t.coeffs.at(static_cast<std::size_t>(v)) = f.one();
  return t;
}

StanleyReisnerRing::StanleyReisnerRing(SimplicialComplex delta) : delta_(std::move(delta)) {}

const MonomialBasis& StanleyReisnerRing::basis(int i) const {
  {
    const std::lock_guard<std::mutex> lock(mutex_);
    const auto it = bases_.find(i);
    if (it != bases_.end()) return *it->second;
  }
  auto b = std::make_unique<MonomialBasis>(delta_, i);
  const std::lock_guard<std::mutex> lock(mutex_);
  auto& slot = bases_[i];
  if (!slot) slot = std::move(b);
  return *slot;
}

const std::vector<int>& StanleyReisnerRing::variable_multiplication(int v, int i) const {
  {
    const std::lock_guard<std::mutex> lock(mutex_);
    const auto it = tables_.find({v, i});
    if (it != tables_.end()) return *it->second;
  }
  const MonomialBasis& src = basis(i);
  const MonomialBasis& dst = basis(i + 1);
  auto table = std::make_unique<std::vector<int>>(src.size(), -1);
  const Face fv = Face::vertex(v);
  for (std::size_t m = 0; m < src.size(); ++m) {
    if (!delta_.contains(src[m].support() | fv)) continue;
    (*table)[m] = dst.index_of(src[m].times_variable(v));
  }
  const std::lock_guard<std::mutex> lock(mutex_);
  auto& slot = tables_[{v, i}];
  if (!slot) slot = std::move(table);
  return *slot;
}

SparseVector StanleyReisnerRing::multiply(const Field& f, const LinearForm& theta, int i, std::size_t m) const {
  SparseVector out;
  for (int v : delta_.vertices()) {
    const Scalar c = theta[v];
    if (c == 0) continue;
    const int r = variable_multiplication(v, i)[m];
    if (r >= 0) out.emplace_back(static_cast<Index>(r), c);
  }
  return normalize(f, std::move(out));
}

SparseVector StanleyReisnerRing::multiply(const Field& f, const LinearForm& theta, int i, const SparseVector& b) const {
  SparseVector out;
  for (int v : delta_.vertices()) {
    const Scalar c = theta[v];
    if (c == 0) continue;
    const auto& table = variable_multiplication(v, i);
    for (const auto& [m, x] : b) {
      const int r = table[m];
      if (r >= 0) out.emplace_back(static_cast<Index>(r), f.mul(c, x));
    }
  }
  return normalize(f, std::move(out));
}

FieldMatrix StanleyReisnerRing::mult_matrix(const Field& f, const LinearForm& theta, int i) const {
  std::vector<Triplet> entries;
  const std::size_t cols = dim(i);
  for (int v : delta_.vertices()) {
    const Scalar c = theta[v];
    if (c == 0) continue;
    const auto& table = variable_multiplication(v, i);
    for (std::size_t m = 0; m < cols; ++m)
      if (table[m] >= 0) entries.push_back({static_cast<Index>(table[m]), static_cast<Index>(m), c});
  }
  return FieldMatrix::from_triplets(f, dim(i + 1), cols, std::move(entries));
}

MonomialBasis monomial_basis(const SimplicialComplex& delta, int i) { return MonomialBasis(delta, i); }

FieldMatrix mult_matrix(const SimplicialComplex& delta, const Field& f, const LinearForm& theta, int i) {
  const StanleyReisnerRing ring(delta);
  return ring.mult_matrix(f, theta, i);
}

std::int64_t hilbert_function(const SimplicialComplex& delta, int i) {
  if (delta.is_void() || i < 0) return 0;
  if (i == 0) return 1;
  std::int64_t n = 0;
  for (Face f : delta.faces())
    if (!f.empty()) n += binomial(i - 1, f.size() - 1);
  return n;
}

HilbertSeriesReport hilbert_series_check(const SimplicialComplex& delta, int up_to) {
  if (up_to < delta.d()) throw std::invalid_argument("hilbert_series_check needs up_to ≥ d");
  HilbertSeriesReport r;
  const std::vector<std::int64_t> h = delta.h_vector();
  const int d = delta.d();
  for (int i = 0; i <= up_to; ++i) {
    r.counted.push_back(static_cast<std::int64_t>(MonomialBasis(delta, i).size()));
    std::int64_t e = 0;
    for (int k = 0; k <= std::min(i, d); ++k) {
      const std::int64_t c = d == 0 ? (i == k ? 1 : 0) : binomial(i - k + d - 1, d - 1);
      e += h[static_cast<std::size_t>(k)] * c;
    }
    r.expected.push_back(e);
    if (r.first_failure < 0 && r.counted.back() != e) r.first_failure = i;
  }
  return r;
}

}  // namespace hvec
