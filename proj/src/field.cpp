#include "hvec/field.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#if defined(__x86_64__)
#include <immintrin.h>
#endif

namespace hvec {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if ((e & 1U) != 0) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1U;
  }
  return r;
}

// Dense polynomials over GF(p), lowest coefficient first, p < 2^31.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
  trim(a);
  const std::size_t n = f.size() - 1;
  const std::uint64_t lead_inv = powmod(f.back(), p - 2, p);
  while (a.size() > n) {
    const std::uint64_t c = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - n;
    for (std::size_t i = 0; i <= n; ++i) {
      a[shift + i] = (a[shift + i] + (p - mulmod(c, f[i], p))) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
    }
  }
  return poly_mod(std::move(c), f, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or irreducibility test.
bool is_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  Poly x = {0, 1};
  Poly g = poly_mod(x, f, p);
  for (std::size_t i = 1; i <= k / 2; ++i) {
    // g <- g^p mod f
    Poly base = g;
    Poly acc = {1};
    std::uint64_t e = p;
    while (e != 0) {
      if ((e & 1U) != 0) acc = poly_mulmod(acc, base, f, p);
      base = poly_mulmod(base, base, f, p);
      e >>= 1U;
    }
    g = acc;
    Poly h = g;
    if (h.size() < 2) h.resize(2, 0);
    h[1] = (h[1] + p - 1) % p;
    Poly d = poly_gcd(h, f, p);
    if (d.size() > 1) return false;
  }
  return true;
}

// Coefficients r of an irreducible x^k - sum r_i x^i with as few terms as
// possible, preferring low degrees; deterministic.
std::vector<std::uint64_t> find_reduction(std::uint64_t p, unsigned k) {
  auto test = [&](const std::vector<std::uint64_t>& r) {
    Poly f(k + 1, 0);
    for (unsigned i = 0; i < k; ++i) f[i] = (p - r[i]) % p;
    f[k] = 1;
    return is_irreducible(f, p);
  };
  for (unsigned weight = 1; weight <= k; ++weight) {
    // positions 0 = q_0 < q_1 < ... < q_{weight-1} < k, colex order
    std::vector<unsigned> pos(weight);
    for (unsigned i = 0; i < weight; ++i) pos[i] = i;
    while (true) {
      std::vector<std::uint64_t> coef(weight, 1);
      while (true) {
        std::vector<std::uint64_t> r(k, 0);
        for (unsigned i = 0; i < weight; ++i) r[pos[i]] = coef[i];
        if (test(r)) return r;
        unsigned i = 0;
        while (i < weight && ++coef[i] == p) coef[i++] = 1;
        if (i == weight) break;
      }
      // next position set, q_0 stays 0
      unsigned i = 1;
      while (i < weight && pos[i] + 1 == (i + 1 < weight ? pos[i + 1] : k)) ++i;
      if (i >= weight) break;
      ++pos[i];
      for (unsigned j = 1; j < i; ++j) pos[j] = j;
    }
  }
  throw std::logic_error("no irreducible polynomial found");
}

unsigned bit_length(std::uint64_t v) {
  unsigned n = 0;
  while (v != 0) {
    ++n;
    v >>= 1U;
  }
  return n;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 63U) || !is_prime(p)) {
    throw std::invalid_argument("field modulus must be a prime below 2^63, got " + std::to_string(p));
  }
  Field f;
  f.p_ = p;
  f.k_ = 1;
  if (p < (1ULL << 32U)) {
    f.kind_ = Kind::Small;
    f.mu_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64U) / p);
  } else {
    f.kind_ = Kind::Large;
  }
  return f;
}

Field Field::extension(std::uint64_t p, unsigned degree) {
  if (degree == 1) return prime(p);
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (degree == 0) throw std::invalid_argument("extension degree must be positive");
  if ((p == 2 || p == 3) && degree > 32) throw std::invalid_argument("GF(2^k) and GF(3^k) support k <= 32");
  const unsigned width = bit_length(p - 1) + 1;
  if (p > 3 && (p >= (1ULL << 30U) || static_cast<unsigned long long>(width) * degree > 64)) {
    throw std::invalid_argument("extension GF(" + std::to_string(p) + "^" + std::to_string(degree) +
                                ") does not fit the packed representation");
  }
  Field f;
  f.p_ = p;
  f.k_ = degree;
  f.mu_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64U) / p);
  const std::vector<std::uint64_t> r = find_reduction(p, degree);
  for (unsigned i = 0; i < degree; ++i) {
    if (r[i] != 0) f.terms_.emplace_back(i, r[i]);
  }
  if (p == 2) {
    f.kind_ = Kind::Binary;
    for (const auto& t : f.terms_) f.binary_terms_ |= 1ULL << t.first;
#if defined(__x86_64__)
    f.clmul_ = __builtin_cpu_supports("pclmul") != 0;
#endif
    return f;
  }
  if (p == 3) {
    f.kind_ = Kind::Ternary;
    return f;
  }
  f.kind_ = Kind::Packed;
  f.width_ = width;
  f.lane_mask_ = (1ULL << width) - 1;
  for (unsigned i = 0; i < degree; ++i) {
    const unsigned shift = i * width;
    f.lanes_high_ |= (1ULL << (width - 1)) << shift;
    f.lanes_bias_ |= ((1ULL << (width - 1)) - p) << shift;
    f.lanes_p_ |= p << shift;
  }
  return f;
}

Field Field::for_characteristic(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime, got " + std::to_string(p));
  if (p >= (1ULL << 30U)) return prime(p);
  unsigned k = 1;
  long double order = static_cast<long double>(p);
  while (order < 2147483648.0L) {
    order *= static_cast<long double>(p);
    ++k;
  }
  return extension(p, k);
}

double Field::log2_order() const { return static_cast<double>(k_) * std::log2(static_cast<double>(p_)); }

std::string Field::name() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (k_ > 1) os << '^' << k_;
  os << ')';
  return os.str();
}

Scalar Field::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t m = v % p;
  if (m < 0) m += p;
  if (kind_ == Kind::Ternary && m == 2) return 1ULL << 32U;
  return static_cast<Scalar>(m);
}

std::int64_t Field::to_int(Scalar a) const {
  switch (kind_) {
    case Kind::Small:
    case Kind::Large:
      return static_cast<std::int64_t>(a);
    case Kind::Binary:
      if (a <= 1) return static_cast<std::int64_t>(a);
      break;
    case Kind::Ternary:
      if (a <= 1) return static_cast<std::int64_t>(a);
      if (a == (1ULL << 32U)) return 2;
      break;
    case Kind::Packed:
      if ((a & lane_mask_) == a) return static_cast<std::int64_t>(a);
      break;
  }
  throw std::domain_error("element is not in the prime subfield");
}

namespace {

#if defined(__x86_64__)
__attribute__((target("pclmul,sse2"))) std::uint64_t clmul_hw(std::uint64_t a, std::uint64_t b) {
  const __m128i r = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(a)),
                                         _mm_cvtsi64_si128(static_cast<long long>(b)), 0);
  return static_cast<std::uint64_t>(_mm_cvtsi128_si64(r));
}
#endif

std::uint64_t clmul_sw(std::uint64_t a, std::uint64_t b) {
  std::uint64_t prod = 0;
  while (b != 0) {
    prod ^= a << static_cast<unsigned>(__builtin_ctzll(b));
    b &= b - 1;
  }
  return prod;
}

struct Trits {
  std::uint64_t ones;
  std::uint64_t twos;
};

inline Trits trit_add(Trits a, Trits b) {
  const std::uint64_t t = (a.ones | b.twos) ^ (a.twos | b.ones);
  return {(a.twos | b.twos) ^ t, (a.ones | b.ones) ^ t};
}

}  // namespace

Scalar Field::binary_mul(Scalar a, Scalar b) const noexcept {
#if defined(__x86_64__)
  std::uint64_t prod = clmul_ ? clmul_hw(a, b) : clmul_sw(a, b);
#else
  std::uint64_t prod = clmul_sw(a, b);
#endif
  const std::uint64_t mask = (1ULL << k_) - 1;
  while (true) {
    const std::uint64_t hi = prod >> k_;
    if (hi == 0) return prod;
    prod &= mask;
    std::uint64_t t = binary_terms_;
    while (t != 0) {
      prod ^= hi << static_cast<unsigned>(__builtin_ctzll(t));
      t &= t - 1;
    }
  }
}

Scalar Field::ternary_mul(Scalar a, Scalar b) const noexcept {
  const Trits x{a & 0xffffffffULL, a >> 32U};
  const Trits nx{x.twos, x.ones};
  Trits acc{0, 0};
  for (std::uint64_t m = b & 0xffffffffULL; m != 0; m &= m - 1) {
    const auto j = static_cast<unsigned>(__builtin_ctzll(m));
    acc = trit_add(acc, {x.ones << j, x.twos << j});
  }
  for (std::uint64_t m = b >> 32U; m != 0; m &= m - 1) {
    const auto j = static_cast<unsigned>(__builtin_ctzll(m));
    acc = trit_add(acc, {nx.ones << j, nx.twos << j});
  }
  const std::uint64_t mask = (1ULL << k_) - 1;
  while (true) {
    const Trits hi{acc.ones >> k_, acc.twos >> k_};
    if ((hi.ones | hi.twos) == 0) break;
    acc.ones &= mask;
    acc.twos &= mask;
    for (const auto& [i, c] : terms_) {
      acc = (c == 1) ? trit_add(acc, {hi.ones << i, hi.twos << i}) : trit_add(acc, {hi.twos << i, hi.ones << i});
    }
  }
  return acc.ones | (acc.twos << 32U);
}

Scalar Field::packed_mul(Scalar a, Scalar b) const noexcept {
  std::uint64_t da[64];
  std::uint64_t db[64];
  std::uint64_t c[128];
  const unsigned k = k_;
  for (unsigned i = 0; i < k; ++i) {
    da[i] = (a >> (i * width_)) & lane_mask_;
    db[i] = (b >> (i * width_)) & lane_mask_;
  }
  for (unsigned t = 0; t + 1 < 2 * k; ++t) c[t] = 0;
  for (unsigned i = 0; i < k; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j) c[i + j] += da[i] * db[j];
  }
  // fold x^t = x^{t-k} * sum r_i x^i for t >= k, from the top
  for (unsigned t = 2 * k - 2; t >= k; --t) {
    const std::uint64_t coef = barrett(c[t]);
    if (coef != 0) {
      for (const auto& [i, r] : terms_) c[t - k + i] += coef * r;
    }
  }
  Scalar out = 0;
  for (unsigned i = 0; i < k; ++i) out |= barrett(c[i]) << (i * width_);
  return out;
}

Scalar Field::pow(Scalar a, unsigned __int128 e) const noexcept {
  Scalar r = one();
  while (e != 0) {
    if ((e & 1U) != 0) r = mul(r, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return r;
}

Scalar Field::inv(Scalar a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (kind_ == Kind::Large) return powmod(a, p_ - 2, p_);
  unsigned __int128 order = 1;
  for (unsigned i = 0; i < k_; ++i) order *= p_;
  return pow(a, order - 2);
}

Scalar Field::random(std::mt19937_64& rng) const {
  switch (kind_) {
    case Kind::Small:
    case Kind::Large:
      return uniform_below(rng, p_);
    case Kind::Binary:
      return rng() & ((1ULL << k_) - 1);
    case Kind::Ternary: {
      Scalar out = 0;
      for (unsigned i = 0; i < k_; ++i) {
        const std::uint64_t t = uniform_below(rng, 3);
        if (t == 1) out |= 1ULL << i;
        if (t == 2) out |= 1ULL << (i + 32U);
      }
      return out;
    }
    case Kind::Packed: {
      Scalar out = 0;
      for (unsigned i = 0; i < k_; ++i) out |= uniform_below(rng, p_) << (i * width_);
      return out;
    }
  }
  return 0;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  while (true) {
    const std::uint64_t x = rng();
    if (x <= limit) return x % bound;
  }
}

double uniform_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11U) * 0x1.0p-53; }

}  // namespace hvec
