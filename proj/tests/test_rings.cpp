#include "doctest.h"

#include "boundgen/error.hpp"
#include "boundgen/rings.hpp"
#include "oracles.hpp"

using namespace boundgen;

namespace {
std::vector<Int> ints(std::initializer_list<long> xs) {
  std::vector<Int> v;
  for (long x : xs)
    v.emplace_back(x);
  return v;
}
}  // namespace

TEST_CASE("ring construction and maximal ideals") {
  Ring z = Ring::integers();
  CHECK(z.is_integers());
  CHECK(z.maximal_ideals().empty());

  Ring r12 = Ring::residue(12);
  CHECK(r12.maximal_ideals() == ints({2, 3}));
  CHECK(Ring::residue(360).maximal_ideals() == ints({2, 3, 5}));
  CHECK(Ring::residue(2).maximal_ideals() == ints({2}));
  CHECK_THROWS_AS(Ring::residue(1), Error);

  CHECK(Ring::prime_field(7).maximal_ideals() == ints({7}));
  CHECK_THROWS_AS(Ring::prime_field(9), Error);

  CHECK(Ring::parse("Zmod:6") == Ring::residue(6));
  CHECK(Ring::parse("Fp:5") == Ring::prime_field(5));
  CHECK(Ring::parse("Z") == z);
  CHECK(Ring::residue(7) != Ring::prime_field(7));
  CHECK_THROWS_AS(Ring::parse("Q"), Error);
  CHECK(Ring::residue(12).to_string() == "Zmod:12");
}

TEST_CASE("normalize is idempotent and canonical") {
  Ring r = Ring::residue(12);
  for (long x = -30; x <= 30; ++x) {
    Int v = r.normalize(x);
    CHECK(v >= 0);
    CHECK(v < 12);
    CHECK(r.normalize(v) == v);
    CHECK(v == oracle::reduce(x, 12));
  }
  CHECK(Ring::integers().normalize(-5) == -5);
}

TEST_CASE("gcd_many") {
  Ring z = Ring::integers();
  CHECK(gcd_many(ints({4, 6, 9}), z) == 1);
  CHECK(gcd_many({}, z) == 0);
  CHECK(gcd_many(ints({-6, 4}), z) == 2);
  CHECK(gcd_many(ints({10, 4}), Ring::residue(12)) == 2);
  CHECK(gcd_many(ints({0, 12}), Ring::residue(12)) == 0);
  CHECK(gcd_many(ints({9}), Ring::residue(6)) == 3);
  CHECK(gcd_many(ints({5}), Ring::prime_field(7)) == 1);
}

TEST_CASE("xgcd identity") {
  Ring z = Ring::integers();
  auto r = xgcd(15, 10, z);
  CHECK(r.g == 5);
  CHECK(r.s == 1);
  CHECK(r.t == -1);
  auto r2 = xgcd(2, 3, z);
  CHECK(r2.g == 1);
  CHECK(r2.s == -1);
  CHECK(r2.t == 1);
  auto r3 = xgcd(7, 0, z);
  CHECK(r3.g == 7);
  CHECK(r3.s == 1);
  CHECK(r3.t == 0);

  for (long l : {12L, 30L, 7L, 2L, 64L}) {
    Ring r = Ring::residue(l);
    for (long a = 0; a < l; ++a)
      for (long b = 0; b < l; ++b) {
        auto x = xgcd(a, b, r);
        CHECK(r.add(r.mul(x.s, a), r.mul(x.t, b)) == x.g);
        CHECK(x.g == gcd_many({Int(a), Int(b)}, r));
        CHECK(divides(x.g, a, r));
        CHECK(divides(x.g, b, r));
      }
  }
  for (long a = -40; a <= 40; a += 3)
    for (long b = -40; b <= 40; b += 7) {
      auto x = xgcd(a, b, z);
      CHECK(x.s * a + x.t * b == x.g);
      CHECK(x.g == oracle::euclid_gcd(a, b));
    }
}

TEST_CASE("units") {
  Ring r12 = Ring::residue(12);
  CHECK(is_unit(5, r12));
  CHECK_FALSE(is_unit(4, r12));
  CHECK(is_unit(1, Ring::integers()));
  CHECK(is_unit(-1, Ring::integers()));
  CHECK_FALSE(is_unit(2, Ring::integers()));
  CHECK(r12.mul(inverse(5, r12), 5) == 1);
  CHECK_THROWS_AS(inverse(4, r12), Error);

  for (long l : {12L, 36L, 30L, 8L}) {
    Ring r = Ring::residue(l);
    for (long a = 0; a < l; ++a) {
      CHECK(is_unit(a, r) == prime_support_of(a, r).primes.empty());
      Int u = unit_to_canonical(a, r);
      CHECK(is_unit(u, r));
      CHECK(r.mul(u, a) == canonical_associate(a, r));
    }
  }
}

TEST_CASE("unit_shift") {
  Ring r12 = Ring::residue(12);
  CHECK(unit_shift(4, 3, r12) == 3);
  CHECK(unit_shift(3, 2, Ring::residue(6)) == 2);
  CHECK_THROWS_AS(unit_shift(4, 2, r12), Error);
  CHECK_THROWS_AS(unit_shift(1, 1, Ring::integers()), Error);
  // a in every maximal ideal: empty product.
  CHECK(unit_shift(0, 1, Ring::residue(6)) == 1);

  for (long l : {12L, 30L, 49L, 210L}) {
    Ring r = Ring::residue(l);
    for (long a = 0; a < l; ++a)
      for (long b = 0; b < l; ++b) {
        if (gcd_many({Int(a), Int(b)}, r) != 1)
          continue;
        Int x = unit_shift(a, b, r);
        CHECK(is_unit(r.add(a, r.mul(b, x)), r));
      }
  }
}

TEST_CASE("prime support") {
  Ring z = Ring::integers();
  CHECK(prime_support_of(6, z).primes == ints({2, 3}));
  CHECK(prime_support_of(0, z).all);
  CHECK(prime_support_of(-1, z).primes.empty());
  CHECK(prime_support_of(9, Ring::residue(6)).primes == ints({3}));

  for (long x = 1; x < 3000; x += 7) {
    auto expected = oracle::trial_factor(x);
    auto got = prime_support_of(x, z).primes;
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i)
      CHECK(got[i] == expected[i]);
  }

  // Beyond trial division: products of two large primes.
  Int p("1000000007"), q("998244353");
  CHECK(distinct_prime_factors(p * q) == std::vector<Int>{q, p});
  Int big("18446744073709551557");  // largest prime below 2^64
  CHECK(distinct_prime_factors(big) == std::vector<Int>{big});
  CHECK(distinct_prime_factors(Int(4) * big) == std::vector<Int>{Int(2), big});
  Int too_big = big * big;
  CHECK_THROWS_AS(distinct_prime_factors(too_big), Error);
  try {
    distinct_prime_factors(too_big);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FactorizationTooLarge);
  }

  for (long p2 = 0; p2 < 500; ++p2)
    CHECK(is_prime(p2) == oracle::naive_is_prime(p2));
}

TEST_CASE("prime support intersection") {
  PrimeSupport all{true, {}};
  PrimeSupport a{false, ints({2, 3, 5})};
  PrimeSupport b{false, ints({3, 5, 7})};
  CHECK(intersect(all, a) == a);
  CHECK(intersect(a, b).primes == ints({3, 5}));
  CHECK(intersect(all, all).all);
  CHECK(a.contains(3));
  CHECK_FALSE(a.contains(7));
}
