#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace hvec {

/// Field elements are stored as raw 64-bit words.
///
///   GF(p):   the residue in [0, p).
///   GF(2^k): bit i is the coefficient of x^i.
///   GF(3^k): bit-sliced; bit i of the low half marks coefficient 1 at x^i,
///            bit i of the high half marks coefficient 2.
///   GF(p^k), p >= 5: coefficient i in a fixed-width lane.
///
/// In every representation 0 and 1 are the words 0 and 1, and the prime
/// subfield element c is the word for the constant polynomial c.
using Scalar = std::uint64_t;

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::uint64_t n);

/// A finite field of characteristic p.
///
/// `for_characteristic` picks GF(p) when p is large and otherwise the smallest
/// extension of order >= 2^31, so that random linear forms behave generically
/// while every dimension count stays the same as over GF(p).
class Field {
 public:
  static Field prime(std::uint64_t p);
  static Field extension(std::uint64_t p, unsigned degree);
  static Field for_characteristic(std::uint64_t p);

  std::uint64_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  bool is_prime_field() const noexcept { return kind_ == Kind::Small || kind_ == Kind::Large; }
  /// log2 of the field order.
  double log2_order() const;
  std::string name() const;
  /// Nonzero coefficients c_i of x^k = sum c_i x^i (empty for prime fields).
  std::vector<std::pair<unsigned, std::uint64_t>> reduction_terms() const { return terms_; }

  Scalar zero() const noexcept { return 0; }
  Scalar one() const noexcept { return 1; }
  /// Image of an integer in the prime subfield.
  Scalar from_int(std::int64_t v) const;
  /// Inverse of `from_int` on the prime subfield; throws for elements outside it.
  std::int64_t to_int(Scalar a) const;

  Scalar add(Scalar a, Scalar b) const noexcept {
    switch (kind_) {
      case Kind::Small:
      case Kind::Large: {
        const Scalar s = a + b;
        return (s >= p_ || s < a) ? s - p_ : s;
      }
      case Kind::Binary:
        return a ^ b;
      case Kind::Ternary:
        return ternary_add(a, b);
      case Kind::Packed:
        return packed_reduce(a + b);
    }
    return 0;
  }
  Scalar neg(Scalar a) const noexcept {
    switch (kind_) {
      case Kind::Small:
      case Kind::Large:
        return a == 0 ? 0 : p_ - a;
      case Kind::Binary:
        return a;
      case Kind::Ternary:
        return (a >> 32U) | (a << 32U);
      case Kind::Packed:
        return packed_reduce(lanes_p_ - a);
    }
    return 0;
  }
  Scalar sub(Scalar a, Scalar b) const noexcept { return add(a, neg(b)); }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    if (a == 0 || b == 0) return 0;
    switch (kind_) {
      case Kind::Small:
        return barrett(a * b);
      case Kind::Large:
        return static_cast<Scalar>(static_cast<unsigned __int128>(a) * b % p_);
      case Kind::Binary:
        return binary_mul(a, b);
      case Kind::Ternary:
        return ternary_mul(a, b);
      case Kind::Packed:
        return packed_mul(a, b);
    }
    return 0;
  }
  /// a + b*c
  Scalar fma(Scalar a, Scalar b, Scalar c) const noexcept { return add(a, mul(b, c)); }
  Scalar inv(Scalar a) const;
  Scalar pow(Scalar a, unsigned __int128 e) const noexcept;

  /// Uniform element; uses only raw engine output so the stream is portable.
  Scalar random(std::mt19937_64& rng) const;

  bool operator==(const Field& o) const noexcept {
    return kind_ == o.kind_ && p_ == o.p_ && k_ == o.k_ && terms_ == o.terms_;
  }
  bool operator!=(const Field& o) const noexcept { return !(*this == o); }

 private:
  enum class Kind : std::uint8_t { Small, Large, Binary, Ternary, Packed };

  Field() = default;

  Scalar barrett(std::uint64_t x) const noexcept {
    const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * mu_) >> 64U);
    std::uint64_t r = x - q * p_;
    while (r >= p_) r -= p_;
    return r;
  }
  static Scalar ternary_add(Scalar a, Scalar b) noexcept {
    const std::uint64_t a1 = a & 0xffffffffULL;
    const std::uint64_t a2 = a >> 32U;
    const std::uint64_t b1 = b & 0xffffffffULL;
    const std::uint64_t b2 = b >> 32U;
    const std::uint64_t t = (a1 | b2) ^ (a2 | b1);
    return ((a2 | b2) ^ t) | (((a1 | b1) ^ t) << 32U);
  }
  Scalar binary_mul(Scalar a, Scalar b) const noexcept;
  Scalar ternary_mul(Scalar a, Scalar b) const noexcept;
  Scalar packed_mul(Scalar a, Scalar b) const noexcept;
  Scalar packed_reduce(Scalar s) const noexcept {
    // Lanes hold values in [0, 2p-2]; the guard bit flags the ones >= p.
    const Scalar over = (s + lanes_bias_) & lanes_high_;
    return s - (over >> (width_ - 1)) * p_;
  }

  Kind kind_ = Kind::Small;
  std::uint64_t p_ = 2;
  unsigned k_ = 1;
  std::uint64_t mu_ = 0;  // floor(2^64 / p) for Barrett reduction, p < 2^32
  bool clmul_ = false;
  std::vector<std::pair<unsigned, std::uint64_t>> terms_;
  std::uint64_t binary_terms_ = 0;  // Binary: bit i set when x^i occurs in x^k + ...
  unsigned width_ = 0;
  Scalar lane_mask_ = 0;
  Scalar lanes_high_ = 0;
  Scalar lanes_bias_ = 0;
  Scalar lanes_p_ = 0;
};

/// Uniform integer in [0, bound) by rejection on raw engine output.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
double uniform_unit(std::mt19937_64& rng);

}  // namespace hvec
