#include "doctest.h"

#include "boundgen/error.hpp"
#include "boundgen/ideals.hpp"
#include "oracles.hpp"

using namespace boundgen;

namespace {
const Ring Z = Ring::integers();

// Rejection sampling for a_{l,i} = 0.
std::optional<MatrixSL> random_admissible(SplitMix64& rng, const Ring& ring, int n, int i, int l, long bound) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    MatrixSL a = oracle::random_sl(rng, ring, n, 2 * n, bound);
    if (a.at(l, i) == 0)
      return a;
  }
  return std::nullopt;
}

// Oracle for Pi(A): primes p <= bound with A mod p scalar, by direct reduction.
std::vector<Int> pi_by_reduction(const MatrixSL& a, long bound) {
  std::vector<Int> out;
  for (long p = 2; p <= bound; ++p) {
    if (!oracle::naive_is_prime(p))
      continue;
    bool scalar = true;
    Int d = oracle::reduce(a.at(1, 1), p);
    for (int i = 1; i <= a.n() && scalar; ++i)
      for (int j = 1; j <= a.n(); ++j) {
        Int v = oracle::reduce(a.at(i, j), p);
        if ((i == j && v != d) || (i != j && v != 0)) {
          scalar = false;
          break;
        }
      }
    if (scalar)
      out.emplace_back(p);
  }
  return out;
}
}  // namespace

TEST_CASE("double commutator examples") {
  MatrixSL id = MatrixSL::identity(Z, 3);
  CHECK(double_commutator(id, 1, 2, 3, 2, 5).M.is_identity());
  CHECK(double_commutator(id, 1, 2, 1, 3, 5).M.is_identity());
  CHECK(double_commutator(id, 1, 2, 2, 3, 5).M.is_identity());
  MatrixSL a = elem(2, 3, 5, 3, Z);
  auto dc = double_commutator(a, 1, 2, 2, 3, 1);
  CHECK(dc.M == dc.closed);
  CHECK(dc.word.length() == 4);
  CHECK(eval(dc.word, GenSet({a})) == dc.M);
}

TEST_CASE("double commutator preconditions") {
  MatrixSL a = elem(3, 1, 2, 3, Z);
  auto code_of = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(code_of([&] { double_commutator(a, 1, 2, 2, 1, 1); }).find("i != l") != std::string::npos);
  CHECK(code_of([&] { double_commutator(a, 1, 2, 2, 3, 1); }).find("a_{l,i}") != std::string::npos);
  CHECK(code_of([&] { double_commutator(MatrixSL::identity(Z, 3), 1, 1, 2, 3, 1); }).find("j != i") !=
        std::string::npos);
  CHECK(code_of([&] { double_commutator(MatrixSL::identity(Z, 3), 1, 2, 3, 3, 1); }).find("k != l") !=
        std::string::npos);
}

TEST_CASE("double commutator closed form on random admissible draws") {
  SplitMix64 rng(1234);
  for (Ring ring : {Z, Ring::residue(12)}) {
    int done = 0;
    while (done < 300) {
      int n = 3 + static_cast<int>(rng.below(2));
      int i = 1 + static_cast<int>(rng.below(n));
      int l = 1 + static_cast<int>(rng.below(n));
      int j = 1 + static_cast<int>(rng.below(n));
      int k = 1 + static_cast<int>(rng.below(n));
      if (i == l || j == i || k == l)
        continue;
      auto a = random_admissible(rng, ring, n, i, l, 3);
      if (!a)
        continue;
      Int x = rng.range(-9, 9);
      auto dc = double_commutator(*a, i, j, k, l, x);
      MatrixSL direct = commutator(commutator(*a, elem(i, j, 1, n, ring)), elem(k, l, x, n, ring));
      CHECK(dc.closed == direct);
      CHECK(eval(dc.word, GenSet({*a})) == direct);
      ++done;
    }
  }
}

TEST_CASE("hessenberg_ideal examples") {
  MatrixSL id = MatrixSL::identity(Z, 3);
  CHECK(hessenberg_ideal(id, 1, 3, 2).t == 0);
  CHECK(hessenberg_ideal(elem(1, 3, 1, 3, Z), 1, 3, 2).t == 0);
  MatrixSL a = elem(2, 1, 7, 3, Z);
  REQUIRE(a.inverse().at(2, 1) == -7);
  ECertificate c = hessenberg_ideal(a, 1, 3, 2);
  CHECK(c.t == 7);
  GenSet s({a});
  CHECK(eval(c.word(1), s) == elem(1, 3, 7, 3, Z));
  CHECK(c.word(1).length() == 4);
  CHECK(eval(c.word(-3), s) == elem(1, 3, -21, 3, Z));

  CHECK_THROWS_AS(hessenberg_ideal(elem(3, 1, 1, 3, Z), 1, 3, 2), Error);
  CHECK_THROWS_AS(hessenberg_ideal(id, 1, 2, 3), Error);
  CHECK_THROWS_AS(hessenberg_ideal(id, 1, 3, 3), Error);
  try {
    hessenberg_ideal(elem(3, 1, 1, 3, Z), 1, 3, 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHessenberg);
  }
}

TEST_CASE("offdiag_ideal examples") {
  MatrixSL diag = MatrixSL::from_rows(Z, {{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}});
  CHECK(offdiag_ideal(diag, 2).t == 0);
  MatrixSL e = elem(1, 3, 6, 3, Z);
  ECertificate c = offdiag_ideal(e, 3);
  CHECK(c.t == 6);
  CHECK(eval(c.word(1), GenSet({e})) == elem(1, 3, 6, 3, Z));
  MatrixSL b = elem(2, 1, 4, 3, Z) * elem(3, 1, 10, 3, Z);
  ECertificate c2 = offdiag_ideal(b, 1);
  CHECK(c2.t == 2);
  CHECK(eval(c2.word(5), GenSet({b})) == elem(1, 3, 10, 3, Z));
}

TEST_CASE("ideal certificates on random matrices") {
  SplitMix64 rng(42);
  for (Ring ring : {Z, Ring::residue(12)}) {
    for (int t = 0; t < 40; ++t) {
      int n = 3 + static_cast<int>(rng.below(2));
      MatrixSL a = oracle::random_sl(rng, ring, n, 2 * n, 4);
      GenSet s({a});
      int m = 1 + static_cast<int>(rng.below(n));
      ECertificate c = offdiag_ideal(a, m);
      std::vector<Int> col;
      for (int k = 1; k <= n; ++k)
        if (k != m)
          col.push_back(a.at(k, m));
      CHECK(c.t == gcd_many(col, ring));
      Int x = rng.range(-5, 5);
      ConjWord w = c.word(x);
      CHECK(w.length() == 4);
      CHECK(eval(w, s) == c.target(x));
      // negation closure
      CHECK(eval(c.word(-x), s) == c.target(x).inverse());

      ObstructionIdeal ob = scalar_obstruction_ideal(a);
      CHECK(ob.parts.size() == static_cast<std::size_t>(n + 1));
      CHECK(ob.depth_total <= static_cast<std::size_t>(4 * n + 4));
      CHECK(divides(ob.J, ob.I, ring));
      for (const auto& p : ob.parts)
        CHECK(eval(p.word(1), s) == p.target(1));
      if (ring.is_integers() && ob.I != 0 && ob.I < 100000) {
        for (const Int& p : distinct_prime_factors(ob.I))
          CHECK(a.reduce(Ring::prime_field(p)).is_scalar());
      }
    }
  }
}

TEST_CASE("scalar obstruction ideal examples") {
  CHECK(scalar_obstruction_ideal(MatrixSL::identity(Z, 3)).I == 0);
  CHECK(scalar_obstruction_ideal(elem(1, 3, 6, 3, Z)).I == 6);
  CHECK(scalar_obstruction_ideal(elem(1, 3, 1, 3, Z)).I == 1);
  CHECK(scalar_obstruction_ideal(elem(1, 4, 6, 4, Z)).I == 6);
  MatrixSL m = MatrixSL::from_rows(Z, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {4, 0, 0, 1}});
  auto ob = scalar_obstruction_ideal(m);
  CHECK(ob.I == 4);
  for (const auto& p : ob.parts)
    CHECK(eval(p.word(3), GenSet({m})) == p.target(3));
}

TEST_CASE("pi_support") {
  CHECK(pi_support(elem(1, 3, 6, 3, Z)).primes == std::vector<Int>{2, 3});
  CHECK(pi_support(MatrixSL::identity(Z, 3)).all);
  CHECK(pi_support(elem(1, 3, 1, 3, Z)).primes.empty());

  SplitMix64 rng(9);
  for (int t = 0; t < 100; ++t) {
    MatrixSL a = oracle::random_sl(rng, Z, 3, 2, 30);
    MatrixSL b = oracle::random_sl(rng, Z, 3, 2, 30);
    auto pa = pi_support(a), pb = pi_support(b), pab = pi_support(a * b);
    PrimeSupport both = intersect(pa, pb);
    if (!both.all && !pab.all)
      for (const Int& p : both.primes)
        CHECK(pab.contains(p));
    if (!pa.all) {
      std::vector<Int> small;
      for (const Int& p : pa.primes)
        if (p <= 100)
          small.push_back(p);
      CHECK(small == pi_by_reduction(a, 100));
    }
  }
}

TEST_CASE("normal generation decision") {
  GenSet yes({elem(1, 3, 2, 3, Z), elem(1, 3, 3, 3, Z)});
  Decision d = decide_normal_generation(yes);
  CHECK(d.yes);
  CHECK(d.word.length() == 2);
  CHECK(eval(d.word, yes) == elem(1, 3, 1, 3, Z));
  CHECK(d.word.length() <= d.length_bound);

  GenSet no({elem(1, 3, 2, 3, Z), elem(1, 3, 4, 3, Z)});
  Decision dn = decide_normal_generation(no);
  CHECK_FALSE(dn.yes);
  CHECK(dn.common_prime == 2);

  GenSet scalar({MatrixSL::identity(Z, 3)});
  Decision ds = decide_normal_generation(scalar);
  CHECK_FALSE(ds.yes);
  CHECK(ds.all_primes);

  SplitMix64 rng(31);
  int yes_count = 0;
  for (int t = 0; t < 40; ++t) {
    int n = 3 + static_cast<int>(rng.below(2));
    std::vector<MatrixSL> gens;
    for (int g = 0; g < 2; ++g) {
      MatrixSL a = oracle::random_sl(rng, Z, n, 3, 6);
      if (std::find(gens.begin(), gens.end(), a) == gens.end())
        gens.push_back(a);
    }
    GenSet s(gens);
    Decision r = decide_normal_generation(s);
    PrimeSupport inter{true, {}};
    for (const auto& a : gens)
      inter = intersect(inter, pi_support(a));
    CHECK(r.yes == (!inter.all && inter.primes.empty()));
    if (r.yes) {
      ++yes_count;
      CHECK(eval(r.word, s) == elem(1, n, 1, n, Z));
      CHECK(r.word.length() <= 4 * s.size() * (n + 1));
    }
  }
  CHECK(yes_count > 0);

  // Residue rings work the same way.
  Ring r12 = Ring::residue(12);
  GenSet s12({elem(1, 3, 3, 3, r12), elem(2, 1, 4, 3, r12)});
  Decision d12 = decide_normal_generation(s12);
  CHECK(d12.yes);
  CHECK(eval(d12.word, s12) == elem(1, 3, 1, 3, r12));
  GenSet s12no({elem(1, 3, 2, 3, r12), elem(2, 1, 4, 3, r12)});
  Decision d12no = decide_normal_generation(s12no);
  CHECK_FALSE(d12no.yes);
  CHECK(d12no.common_prime == 2);
}
