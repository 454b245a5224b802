#include "doctest.h"

#include "boundgen/error.hpp"
#include "boundgen/words.hpp"
#include "oracles.hpp"

using namespace boundgen;

namespace {
const Ring Z = Ring::integers();
}

TEST_CASE("evaluation basics") {
  MatrixSL a = MatrixSL::from_rows(Z, {{2, 1, 0}, {1, 1, 0}, {0, 0, 1}});
  GenSet s({a});
  ConjWord empty;
  CHECK(eval(empty, s).is_identity());
  ConjWord one;
  one.push(0, 1, MatrixSL::identity(Z, 3));
  CHECK(eval(one, s) == a);
  ConjWord bad;
  bad.push(3, 1, MatrixSL::identity(Z, 3));
  CHECK_THROWS_AS(eval(bad, s), Error);
  ConjWord wrong_ring;
  wrong_ring.push(0, 1, MatrixSL::identity(Ring::residue(5), 3));
  CHECK_THROWS_AS(eval(wrong_ring, s), Error);
}

TEST_CASE("GenSet invariants") {
  GenSet s(Z, 3);
  s.add(elem(1, 2, 1, 3, Z));
  CHECK_THROWS_AS(s.add(elem(1, 2, 1, 3, Z)), Error);
  CHECK(s.intern(elem(1, 2, 1, 3, Z)) == 0);
  CHECK(s.intern(elem(1, 3, 1, 3, Z)) == 1);
  CHECK_THROWS_AS(s.add(elem(1, 2, 1, 4, Z)), Error);
  CHECK_THROWS_AS(s.add(elem(1, 2, 1, 3, Ring::residue(4))), Error);
}

TEST_CASE("double commutator word matches direct product") {
  // [[A, E], F] with E = E_{1,2}(1), F = E_{2,3}(x) written as four conjugates of A^{+-1}.
  MatrixSL a = MatrixSL::from_rows(Z, {{1, 5, 0}, {0, 1, 0}, {0, 0, 1}}) * elem(2, 1, 3, 3, Z);
  MatrixSL e = elem(1, 2, 1, 3, Z);
  MatrixSL f = elem(2, 3, 4, 3, Z);
  GenSet s({a});
  MatrixSL id = MatrixSL::identity(Z, 3);
  ConjWord w;
  w.push(0, 1, id);
  w.push(0, -1, e);
  w.push(0, 1, f * e);
  w.push(0, -1, f);
  CHECK(eval(w, s) == commutator(commutator(a, e), f));
}

TEST_CASE("word calculus") {
  SplitMix64 rng(3);
  Ring r = Ring::residue(12);
  GenSet s({oracle::random_sl(rng, r, 3, 8, 11), oracle::random_sl(rng, r, 3, 8, 11)});
  auto random_word = [&](int len) {
    ConjWord w;
    for (int i = 0; i < len; ++i)
      w.push(rng.below(2), rng.below(2) ? 1 : -1, oracle::random_sl(rng, r, 3, 6, 11));
    return w;
  };
  for (int t = 0; t < 30; ++t) {
    ConjWord w1 = random_word(2), w2 = random_word(3);
    ConjWord c = concat(w1, w2);
    CHECK(c.length() == 5);
    CHECK(eval(c, s) == eval(w1, s) * eval(w2, s));
    CHECK(eval(invert(w1), s) == eval(w1, s).inverse());
    CHECK(invert(w1).length() == w1.length());
    MatrixSL h = oracle::random_sl(rng, r, 3, 6, 11);
    ConjWord w4 = random_word(4);
    CHECK(conjugate_word(w4, h).length() == 4);
    CHECK(eval(conjugate_word(w4, h), s) == conj(eval(w4, s), h));
    CHECK(eval(transpose_word(w4), s.transposed()) == eval(w4, s).transpose());
    CHECK(eval(power(w1, -3), s) == eval(w1, s).inverse() * eval(w1, s).inverse() * eval(w1, s).inverse());
  }
  CHECK(invert(ConjWord{}).empty());
}

TEST_CASE("absorb_conjugator rewrites letters over a conjugated generator") {
  SplitMix64 rng(8);
  MatrixSL a = oracle::random_sl(rng, Z, 3, 6, 3);
  MatrixSL g = oracle::random_sl(rng, Z, 3, 6, 3);
  GenSet s({a});
  GenSet sg({conj(a, g)});
  ConjWord w;
  w.push(0, 1, elem(1, 2, 3, 3, Z));
  w.push(0, -1, elem(3, 1, -2, 3, Z));
  CHECK(eval(absorb_conjugator(w, g), s) == eval(w, sg));
}

TEST_CASE("substitution") {
  // T = {E_{1,2}(x), E_{2,3}(y), E_{3,1}(z)} over S = {E_{1,3}(1)}
  const int n = 3;
  MatrixSL a = elem(1, n, 1, n, Z);
  GenSet s({a});
  GenSet t({elem(1, 2, 7, n, Z), elem(2, 3, 2, n, Z)});
  MatrixSL id = MatrixSL::identity(Z, n);
  // E_{1,2}(x) = [E_{1,3}(1), E_{3,2}(x)] = A (E_{3,2}(x) A^-1 E_{3,2}(-x))
  ConjWord e12;
  e12.push(0, 1, id);
  e12.push(0, -1, elem(3, 2, 7, n, Z));
  REQUIRE(eval(e12, s) == t[0]);
  // E_{2,3}(2) = sigma E_{1,3}(2) sigma^-1 with sigma = sigma_{2,1}: two letters
  MatrixSL sg = sigma(2, 1, n, Z);
  REQUIRE(conj(elem(1, 3, 2, n, Z), sg) == t[1]);
  ConjWord e23;
  e23.push(0, 1, sg);
  e23.push(0, 1, sg);
  REQUIRE(eval(e23, s) == t[1]);

  ConjWord w;
  w.push(0, 1, id);
  w.push(1, -1, elem(2, 1, 1, n, Z));
  w.push(0, 1, elem(3, 2, 5, n, Z));
  std::map<std::size_t, ConjWord> dict{{0, e12}, {1, e23}};
  ConjWord sub = substitute(w, t, dict, s);
  CHECK(sub.length() <= 6);
  CHECK(eval(sub, s) == eval(w, t));

  std::map<std::size_t, ConjWord> partial{{0, e12}};
  CHECK_THROWS_AS(substitute(w, t, partial, s), Error);
  std::map<std::size_t, ConjWord> wrong{{0, e12}, {1, e12}};
  try {
    substitute(w, t, wrong, s);
    FAIL("expected BadDictEntry");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadDictEntry);
  }

  // Length-1 dictionary entries preserve length.
  GenSet t2({conj(a, sg)});
  ConjWord one;
  one.push(0, 1, sg);
  ConjWord w2;
  w2.push(0, 1, id);
  w2.push(0, -1, elem(1, 2, 4, n, Z));
  CHECK(substitute(w2, t2, {{0, one}}, s).length() == 2);
}

TEST_CASE("certificate verification") {
  MatrixSL a = elem(1, 3, 1, 3, Z);
  GenSet s({a});
  ConjWord w;
  w.push(0, 1, MatrixSL::identity(Z, 3));
  w.push(0, -1, elem(3, 2, 7, 3, Z));
  Certificate c = make_certificate(s, w);
  CHECK(c.target == elem(1, 2, 7, 3, Z));
  CHECK(verify(c).ok);

  Certificate tampered = c;
  tampered.word.letters[1].exponent = 1;
  auto r = verify(tampered);
  CHECK_FALSE(r.ok);
  REQUIRE(r.first_mismatch);
  CHECK(*r.first_mismatch == 1);

  Certificate bad_len = c;
  bad_len.claimed_length = 1;
  CHECK_FALSE(verify(bad_len).ok);

  Certificate no_partials = c;
  no_partials.partials.reset();
  no_partials.target = a;
  auto r2 = verify(no_partials);
  CHECK_FALSE(r2.ok);
  CHECK(*r2.first_mismatch == 2);
}
