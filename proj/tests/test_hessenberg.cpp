#include "doctest.h"

#include "boundgen/error.hpp"
#include "boundgen/hessenberg.hpp"
#include "oracles.hpp"

using namespace boundgen;

namespace {
const Ring Z = Ring::integers();

std::vector<Int> row_times(const std::vector<Int>& a, const MatrixSL& m) {
  std::vector<Int> out(m.n(), Int(0));
  for (int j = 1; j <= m.n(); ++j)
    for (int i = 1; i <= m.n(); ++i)
      out[j - 1] += a[i - 1] * m.at(i, j);
  for (auto& v : out)
    v = m.ring().normalize(v);
  return out;
}

bool lower_hessenberg(const MatrixSL& m) {
  for (int i = 1; i <= m.n(); ++i)
    for (int j = i + 2; j <= m.n(); ++j)
      if (m.at(i, j) != 0)
        return false;
  return true;
}
}  // namespace

TEST_CASE("gcd_reduce_row examples") {
  std::vector<Int> a{4, 6, 9};
  auto r = gcd_reduce_row(a, Z);
  CHECK(r.t == 1);
  CHECK(row_times(a, r.A) == std::vector<Int>{1, 0, 0});
  CHECK(oracle::laplace_det(r.A.matrix().rows()) == 1);

  auto zero = gcd_reduce_row({0, 0, 0}, Z);
  CHECK(zero.t == 0);
  CHECK(zero.A.is_identity());

  auto five = gcd_reduce_row({5, 0, 0}, Z);
  CHECK(five.t == 5);
  CHECK(five.A.is_identity());

  auto neg = gcd_reduce_row({-6, 0}, Z);
  CHECK(neg.t == 6);
  CHECK(row_times({-6, 0}, neg.A) == std::vector<Int>{6, 0});
}

TEST_CASE("gcd_reduce_row random over Z and Z/12") {
  SplitMix64 rng(21);
  for (Ring ring : {Z, Ring::residue(12), Ring::residue(30), Ring::prime_field(7)}) {
    for (int t = 0; t < 300; ++t) {
      int n = 2 + static_cast<int>(rng.below(4));
      std::vector<Int> a(n);
      for (auto& v : a)
        v = rng.range(-30, 30);
      auto r = gcd_reduce_row(a, ring);
      std::vector<Int> expected(n, Int(0));
      expected[0] = r.t;
      CHECK(row_times(a, r.A) == expected);
      CHECK(r.t == gcd_many(a, ring));
      CHECK(oracle::reduce(oracle::laplace_det(r.A.matrix().rows()), ring.modulus()) == 1);
      auto c = gcd_reduce_col(a, ring);
      CHECK(c.A == r.A.transpose());
    }
  }
}

TEST_CASE("to_hessenberg examples") {
  MatrixSL h = MatrixSL::from_rows(Z, {{1, 1, 0}, {1, 2, 1}, {0, 1, 2}});
  REQUIRE(h.matrix().det() == 1);
  auto c = to_hessenberg(h);
  CHECK(c.H == h);
  CHECK(c.P.is_identity());

  auto e = to_hessenberg(elem(3, 1, 7, 3, Z));
  CHECK(e.H.at(1, 1) == 1);
  CHECK(e.H.at(2, 1) == 7);
  CHECK(e.H.at(3, 1) == 0);

  MatrixSL two = MatrixSL::from_rows(Z, {{3, 2}, {4, 3}});
  auto c2 = to_hessenberg(two);
  CHECK(c2.P.is_identity());
  CHECK(c2.H == two);
}

TEST_CASE("to_hessenberg random") {
  SplitMix64 rng(77);
  for (Ring ring : {Z, Ring::residue(12)}) {
    for (int t = 0; t < 500; ++t) {
      int n = 3 + static_cast<int>(rng.below(3));
      MatrixSL m = oracle::random_sl(rng, ring, n, 3 * n, 9);
      auto c = to_hessenberg(m);
      CHECK(c.H.is_upper_hessenberg());
      CHECK(c.P * m * c.P.inverse() == c.H);
      CHECK(c.H.at(1, 1) == m.at(1, 1));
      std::vector<Int> col;
      for (int i = 2; i <= n; ++i)
        col.push_back(m.at(i, 1));
      CHECK(canonical_associate(c.H.at(2, 1), ring) == gcd_many(col, ring));
      // P fixes the first coordinate.
      CHECK(c.P.at(1, 1) == 1);
      for (int j = 2; j <= n; ++j) {
        CHECK(c.P.at(1, j) == 0);
        CHECK(c.P.at(j, 1) == 0);
      }
      CHECK(to_hessenberg(c.H).H == c.H);
      // Lower-Hessenberg form through transposes.
      auto ct = to_hessenberg(m.transpose());
      MatrixSL q = ct.P.inverse_transpose();
      MatrixSL low = q * m * q.inverse();
      CHECK(low == ct.H.transpose());
      CHECK(lower_hessenberg(low));
    }
  }
}

TEST_CASE("unicol_to_elementary") {
  auto r = unicol_to_elementary({2, 4}, 3, 3, Z);
  CHECK(r.t == 2);
  Matrix x = Matrix::identity(Z, 3);
  x.set(1, 3, 2);
  x.set(2, 3, 4);
  CHECK(conj(MatrixSL(x), r.C) == elem(1, 3, 2, 3, Z));

  auto id = unicol_to_elementary({5, 0, 0}, 4, 4, Z);
  CHECK(id.t == 5);
  CHECK(id.C.is_identity());

  auto zero = unicol_to_elementary({0, 0}, 3, 4, Z);
  CHECK(zero.t == 0);

  SplitMix64 rng(4);
  for (Ring ring : {Z, Ring::residue(12), Ring::residue(8)}) {
    for (int t = 0; t < 200; ++t) {
      int n = 3 + static_cast<int>(rng.below(3));
      int k = 2 + static_cast<int>(rng.below(n - 1));
      std::vector<Int> a(k - 1);
      for (auto& v : a)
        v = rng.range(-20, 20);
      auto u = unicol_to_elementary(a, k, n, ring);
      CHECK(u.t == gcd_many(a, ring));
      Matrix xm = Matrix::identity(ring, n);
      for (int i = 1; i < k; ++i)
        xm.set(i, k, a[i - 1]);
      CHECK(conj(MatrixSL(xm), u.C) == elem(1, n, u.t, n, ring));
    }
  }
}

TEST_CASE("general column and row unipotents") {
  SplitMix64 rng(6);
  for (Ring ring : {Z, Ring::residue(12)}) {
    for (int t = 0; t < 200; ++t) {
      int n = 3 + static_cast<int>(rng.below(3));
      int k = 1 + static_cast<int>(rng.below(n));
      std::vector<Int> c(n);
      for (int i = 0; i < n; ++i)
        c[i] = (i == k - 1) ? Int(0) : Int(rng.range(-15, 15));
      auto col = column_unipotent_to_elementary(c, k, ring);
      CHECK(canonical_associate(col.t, ring) == gcd_many(c, ring));
      auto row = row_unipotent_to_elementary(c, k, ring);
      CHECK(canonical_associate(row.t, ring) == gcd_many(c, ring));
    }
  }
  CHECK_THROWS_AS(column_unipotent_to_elementary({1, 1, 1}, 2, Z), Error);
}
