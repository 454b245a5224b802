#include "doctest.h"

#include "boundgen/error.hpp"
#include "boundgen/matrix.hpp"
#include "oracles.hpp"

using namespace boundgen;

TEST_CASE("determinant agrees with Laplace expansion") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng.below(5));
    std::vector<std::vector<Int>> rows(n, std::vector<Int>(n));
    for (auto& r : rows)
      for (auto& v : r)
        v = rng.range(-9, 9);
    Matrix m = Matrix::from_rows(Ring::integers(), rows);
    CHECK(m.det() == oracle::laplace_det(rows));
    Matrix m7 = Matrix::from_rows(Ring::residue(12), rows);
    CHECK(m7.det() == oracle::reduce(oracle::laplace_det(rows), 12));
    // A adj(A) = det(A) I
    Matrix prod = m * m.adjugate();
    CHECK(prod == Matrix::identity(Ring::integers(), n).scaled(m.det()));
  }
}

TEST_CASE("non det-1 matrices are rejected") {
  CHECK_THROWS_AS(MatrixSL::from_rows(Ring::integers(), {{2, 0}, {0, 1}}), Error);
  try {
    MatrixSL::from_rows(Ring::integers(), {{1, 1}, {1, 1}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSL);
  }
  CHECK_NOTHROW(MatrixSL::from_rows(Ring::residue(5), {{2, 0}, {0, 3}}));
  CHECK_THROWS_AS(MatrixSL::from_rows(Ring::integers(), {{1, 0}, {0}}), Error);
}

TEST_CASE("elementary matrices") {
  Ring z = Ring::integers();
  MatrixSL e = elem(1, 3, 5, 3, z);
  CHECK(e.at(1, 3) == 5);
  CHECK(e.at(1, 1) == 1);
  CHECK(e.at(2, 1) == 0);
  CHECK(elem(1, 2, 0, 3, z).is_identity());
  CHECK(elem(2, 1, -1, 2, Ring::residue(6)).at(2, 1) == 5);
  CHECK_THROWS_AS(elem(1, 1, 1, 3, z), Error);
  CHECK_THROWS_AS(elem(0, 1, 1, 3, z), Error);
  CHECK_THROWS_AS(elem(1, 4, 1, 3, z), Error);
  CHECK(elem(1, 3, 7, 3, z).inverse() == elem(1, 3, -7, 3, z));

  auto spec = as_elementary(e);
  REQUIRE(spec);
  CHECK(spec->i == 1);
  CHECK(spec->j == 3);
  CHECK(spec->x == 5);
  CHECK_FALSE(as_elementary(MatrixSL::identity(z, 3)));
  CHECK_FALSE(as_elementary(e * elem(2, 1, 1, 3, z)));
}

TEST_CASE("inverse, conjugation, ring mismatch") {
  SplitMix64 rng(5);
  Ring r12 = Ring::residue(12);
  for (int t = 0; t < 50; ++t) {
    MatrixSL a = oracle::random_sl(rng, r12, 3, 12, 11);
    MatrixSL h = oracle::random_sl(rng, r12, 3, 12, 11);
    CHECK((a.inverse() * a).is_identity());
    CHECK((a * a.inverse()).is_identity());
    CHECK(conj(a, MatrixSL::identity(r12, 3)) == a);
    CHECK(conj(conj(a, h), h.inverse()) == a);
    CHECK(a.matrix().det() == 1);
    CHECK((a * h).matrix().det() == 1);
    CHECK(oracle::multiply(a.matrix().rows(), h.matrix().rows(), 12) == (a * h).matrix().rows());
  }
  MatrixSL z3 = MatrixSL::identity(Ring::integers(), 3);
  CHECK_THROWS_AS(z3 * MatrixSL::identity(r12, 3), Error);
  CHECK_THROWS_AS(z3 * MatrixSL::identity(Ring::integers(), 4), Error);
}

TEST_CASE("sigma matrices") {
  Ring z = Ring::integers();
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j)
          continue;
        CHECK((sigma(i, j, n, z) * sigma(j, i, n, z)).is_identity());
        CHECK(sigma(i, j, n, z).inverse() == sigma(j, i, n, z));
      }
}

TEST_CASE("Steinberg relations against exact commutators") {
  Ring z = Ring::integers();
  ElemSpec a{1, 2, 5}, b{2, 3, 7};
  auto r = steinberg_commutator(a, b, 3, z);
  REQUIRE(r);
  CHECK(*r == ElemSpec{1, 3, 35});
  CHECK_FALSE(steinberg_commutator({1, 2, 3}, {3, 4, 2}, 4, z));
  CHECK_THROWS_AS(steinberg_commutator({1, 2, 3}, {3, 1, 2}, 3, z), Error);

  SplitMix64 rng(99);
  int checked = 0;
  for (int t = 0; t < 1000; ++t) {
    int n = 3 + static_cast<int>(rng.below(3));
    auto pick = [&](ElemSpec& e) {
      e.i = 1 + static_cast<int>(rng.below(n));
      do
        e.j = 1 + static_cast<int>(rng.below(n));
      while (e.j == e.i);
      e.x = rng.range(-20, 20);
    };
    ElemSpec e1, e2;
    pick(e1);
    pick(e2);
    MatrixSL exact = commutator(elem(e1, n, z), elem(e2, n, z));
    if (e1.i == e2.j) {
      CHECK_THROWS_AS(steinberg_commutator(e1, e2, n, z), Error);
      continue;
    }
    auto s = steinberg_commutator(e1, e2, n, z);
    CHECK((s ? elem(*s, n, z) : MatrixSL::identity(z, n)) == exact);
    ++checked;
  }
  CHECK(checked > 500);
}

TEST_CASE("reduction maps") {
  Ring z = Ring::integers();
  CHECK(elem(1, 3, 6, 3, z).reduce(Ring::prime_field(2)).is_identity());
  CHECK(elem(1, 3, 6, 3, z).reduce(Ring::prime_field(5)) == elem(1, 3, 1, 3, Ring::prime_field(5)));
  CHECK(MatrixSL::identity(z, 4).reduce(Ring::residue(9)).is_identity());
  CHECK(elem(1, 2, 5, 2, Ring::residue(12)).reduce(Ring::residue(4)) == elem(1, 2, 1, 2, Ring::residue(4)));
  CHECK_THROWS_AS(elem(1, 2, 5, 2, Ring::residue(12)).reduce(Ring::residue(5)), Error);
}

TEST_CASE("scalar and Hessenberg predicates") {
  Ring f7 = Ring::prime_field(7);
  CHECK(MatrixSL::identity(f7, 3).is_scalar());
  CHECK_FALSE(elem(1, 2, 1, 3, f7).is_scalar());
  MatrixSL two = MatrixSL::from_rows(f7, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  CHECK(two.is_scalar());
  CHECK(elem(1, 3, 4, 3, f7).is_upper_hessenberg());
  CHECK(elem(2, 1, 4, 3, f7).is_upper_hessenberg());
  CHECK_FALSE(elem(3, 1, 4, 3, f7).is_upper_hessenberg());
}

TEST_CASE("embedding") {
  Ring z = Ring::integers();
  MatrixSL b = MatrixSL::from_rows(z, {{2, 1}, {1, 1}});
  MatrixSL e = embed(b, 4, 1);
  CHECK(e.at(2, 2) == 2);
  CHECK(e.at(3, 2) == 1);
  CHECK(e.at(1, 1) == 1);
  CHECK(e.at(4, 4) == 1);
  CHECK(e.matrix().det() == 1);
  CHECK_THROWS_AS(embed(b, 4, 3), Error);
}
