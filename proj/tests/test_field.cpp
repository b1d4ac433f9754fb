#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hvec/field.hpp"

using hvec::Field;
using hvec::Scalar;

namespace {

// Schoolbook product in GF(p)[x] reduced by x^k = sum r_i x^i, on unpacked digits.
std::vector<std::uint64_t> slow_mul(std::uint64_t p, const std::vector<std::uint64_t>& r,
                                    const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  const std::size_t k = r.size();
  std::vector<std::uint64_t> c(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  for (std::size_t t = 2 * k - 1; t >= k; --t) {
    const std::uint64_t x = c[t];
    c[t] = 0;
    for (std::size_t i = 0; i < k; ++i) c[t - k + i] = (c[t - k + i] + x * r[i]) % p;
  }
  c.resize(k);
  return c;
}

void check_axioms(const Field& f, int trials) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < trials; ++t) {
    const Scalar a = f.random(rng);
    const Scalar b = f.random(rng);
    const Scalar c = f.random(rng);
    CHECK(f.add(a, b) == f.add(b, a));
    CHECK(f.mul(a, b) == f.mul(b, a));
    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    CHECK(f.add(a, f.neg(a)) == 0);
    CHECK(f.sub(f.add(a, b), b) == a);
    if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    // Frobenius is additive
    const auto p = static_cast<unsigned __int128>(f.characteristic());
    CHECK(f.pow(f.add(a, b), p) == f.add(f.pow(a, p), f.pow(b, p)));
  }
}

}  // namespace

TEST_CASE("primality") {
  CHECK(hvec::is_prime(2));
  CHECK(hvec::is_prime(3));
  CHECK(hvec::is_prime(2147483647));
  CHECK(hvec::is_prime(9223372036854775783ULL));
  CHECK_FALSE(hvec::is_prime(1));
  CHECK_FALSE(hvec::is_prime(91));
  CHECK_FALSE(hvec::is_prime(3215031751ULL));  // strong pseudoprime to bases 2,3,5,7
  CHECK_FALSE(hvec::is_prime(2147483647ULL * 2147483647ULL));
}

TEST_CASE("prime field arithmetic") {
  const Field f = Field::prime(7);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.from_int(-1) == 6);
  CHECK(f.to_int(f.from_int(10)) == 3);
  check_axioms(Field::prime(2147483647), 200);
  check_axioms(Field::prime(9223372036854775783ULL), 200);
  CHECK_THROWS(Field::prime(15));
}

TEST_CASE("field chosen per characteristic") {
  CHECK(Field::for_characteristic(2147483647).is_prime_field());
  const Field f2 = Field::for_characteristic(2);
  CHECK(f2.degree() == 31);
  CHECK(f2.name() == "GF(2^31)");
  const Field f3 = Field::for_characteristic(3);
  CHECK(f3.degree() == 20);
  CHECK(f3.log2_order() >= 31.0);
  CHECK(Field::for_characteristic(5).degree() == 14);
  CHECK(Field::for_characteristic(1000003).degree() == 2);
  CHECK_THROWS(Field::for_characteristic(4));
}

TEST_CASE("extension field axioms") {
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 1000003ULL}) {
    CAPTURE(p);
    check_axioms(Field::for_characteristic(p), 100);
  }
  check_axioms(Field::extension(3, 2), 100);
  check_axioms(Field::extension(2, 8), 100);
}

TEST_CASE("extension is a field of the expected order") {
  // x^(q) = x and the multiplicative group has no smaller exponent dividing (q-1)/r.
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 8}, {3, 5}, {5, 4}, {2, 31}, {3, 20}}) {
    CAPTURE(p);
    CAPTURE(k);
    const Field f = Field::extension(p, k);
    unsigned __int128 q = 1;
    for (unsigned i = 0; i < k; ++i) q *= p;
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
      const Scalar a = f.random(rng);
      CHECK(f.pow(a, q) == a);
    }
    // x itself generates GF(p^k) over GF(p): x^(p^(k/r)) != x for prime r | k.
    Scalar x = 2;
    if (p > 3) x = Scalar{1} << (static_cast<unsigned>(64 - __builtin_clzll(p - 1)) + 1);
    for (unsigned r = 2; r <= k; ++r) {
      if (k % r != 0) continue;
      bool prime_r = true;
      for (unsigned s = 2; s * s <= r; ++s) prime_r = prime_r && (r % s != 0);
      if (!prime_r) continue;
      unsigned __int128 e = 1;
      for (unsigned i = 0; i < k / r; ++i) e *= p;
      CHECK(f.pow(x, e) != x);
    }
  }
}

// Digits of an extension element, decoded from the documented word layout.
std::vector<std::uint64_t> digits(const Field& f, Scalar a) {
  const std::uint64_t p = f.characteristic();
  std::vector<std::uint64_t> d(f.degree(), 0);
  for (unsigned i = 0; i < f.degree(); ++i) {
    if (p == 2) {
      d[i] = (a >> i) & 1U;
    } else if (p == 3) {
      d[i] = ((a >> i) & 1U) + 2 * ((a >> (i + 32)) & 1U);
    } else {
      const unsigned w = static_cast<unsigned>(64 - __builtin_clzll(p - 1)) + 1;
      d[i] = (a >> (i * w)) & ((1ULL << w) - 1);
    }
  }
  return d;
}

TEST_CASE("extension multiplication matches schoolbook reduction") {
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL}) {
    CAPTURE(p);
    const Field f = Field::for_characteristic(p);
    std::vector<std::uint64_t> r(f.degree(), 0);
    for (const auto& [i, c] : f.reduction_terms()) r[i] = c;
    CHECK(f.reduction_terms().size() <= 5);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 300; ++t) {
      const Scalar a = f.random(rng);
      const Scalar b = f.random(rng);
      CHECK(digits(f, f.mul(a, b)) == slow_mul(p, r, digits(f, a), digits(f, b)));
      std::vector<std::uint64_t> sum = digits(f, a);
      const std::vector<std::uint64_t> db = digits(f, b);
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = (sum[i] + db[i]) % p;
      CHECK(digits(f, f.add(a, b)) == sum);
    }
  }
}

TEST_CASE("prime subfield embedding") {
  const Field f = Field::for_characteristic(3);
  CHECK(f.to_int(f.from_int(2)) == 2);
  CHECK(f.from_int(-1) == f.neg(f.one()));
  CHECK(f.add(f.from_int(2), f.from_int(2)) == f.from_int(1));
  std::mt19937_64 rng(1);
  Scalar a = f.random(rng);
  while (a < 8) a = f.random(rng);
  CHECK_THROWS(f.to_int(a));
}

TEST_CASE("sampling is reproducible") {
  std::mt19937_64 a(42);
  std::mt19937_64 b(42);
  const Field f = Field::prime(2147483647);
  for (int i = 0; i < 10; ++i) CHECK(f.random(a) == f.random(b));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const double u = hvec::uniform_unit(rng);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(hvec::uniform_below(rng, 3) < 3);
  }
}
