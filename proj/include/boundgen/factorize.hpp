#pragma once

#include <cstddef>
#include <functional>

#include "boundgen/words.hpp"

namespace boundgen {

// C E_{i,j}(x) C^-1 = E_{1,n}(sign * x) for every x; sign is +1 for n >= 3.
struct ElemNormalizer {
  MatrixSL C;
  int sign = 1;
};

ElemNormalizer elem_conjugacy_normalize(int i, int j, int n, const Ring& ring);
// Two conjugates of E_{1,n}(1)^{+-1} (gen index `gen`) whose product is E_{i,j}(x); n >= 3.
ConjWord elem_as_two(int i, int j, const Int& x, int n, const Ring& ring, std::size_t gen = 0);

// Word over elementary generators E_{1,n}(t); every letter is a conjugate of
// an elementary matrix.
struct ElemFactorization {
  GenSet gens;
  ConjWord word;
};

ElemFactorization factor_semilocal(const MatrixSL& a);

using BaseFactorizer = std::function<ElemFactorization(const MatrixSL&)>;
// Peels SL(n) down to SL(m) with at most four letters per dimension, then
// hands the remaining block to `base`, whose words must not exceed `base_bound`.
ElemFactorization stable_range_reduce(const MatrixSL& a, int m, const BaseFactorizer& base,
                                      std::size_t base_bound);

// Euclidean elimination over Z; no length bound.
ElemFactorization factor_euclid(const MatrixSL& a);

// Rewrites a word over any elementary generating set as one over E_{1,n}(t) generators.
ElemFactorization normalize_elementary_word(const GenSet& gens, const ConjWord& word);

}  // namespace boundgen
