#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "boundgen/hessenberg.hpp"
#include "boundgen/words.hpp"

namespace boundgen {

struct DoubleCommutator {
  MatrixSL M;         // [[A, E_{i,j}(1)], E_{k,l}(x)]
  MatrixSL closed;    // the closed form, equal to M
  ConjWord word;      // four conjugates of A^{+-1}, over a set with A at gen index 0
};

DoubleCommutator double_commutator(const MatrixSL& a, int i, int j, int k, int l, const Int& x);
MatrixSL double_commutator_closed_form(const MatrixSL& a, int i, int j, int k, int l, const Int& x);
ConjWord double_commutator_word(std::size_t gen, int i, int j, int k, int l, const Int& x, int n,
                                const Ring& ring);

// Proof that the ideal (t) lies in E(A, 4): for every x, word(x) is a product of
// four conjugates of A^{+-1} evaluating to E_{1,n}(x t).
//
// Internally: a double commutator on `base` with k = j, conjugated by
// `normalizer` to E_{1,n}(z t_base); base = G A G^-1, or base^T = G A G^-1 when
// `transposed`.
struct ECertificate {
  Int t;
  std::string label;
  MatrixSL base;
  int i = 1, j = 2, l = 3;
  MatrixSL normalizer;
  Int t_base;
  Int q;  // t = q t_base
  bool transposed = false;
  MatrixSL G;

  int n() const { return base.n(); }
  const Ring& ring() const { return base.ring(); }
  ConjWord word(const Int& x, std::size_t gen = 0) const;
  MatrixSL target(const Int& x) const;
  std::size_t depth() const { return 4; }
};

ECertificate hessenberg_ideal(const MatrixSL& h, int i, int l, int j);
ECertificate offdiag_ideal(const MatrixSL& a, int m);
// Same certificate, valid for P^-1 A P instead of A.
ECertificate rebase(const ECertificate& c, const MatrixSL& p);

struct ObstructionIdeal {
  Int I;                            // canonical generator
  std::vector<ECertificate> parts;  // J_1, ..., J_{n+1}
  Int J;                            // canonical generator of J_1 + ... + J_{n+1}
  std::size_t depth_total = 0;
  HessenbergCert hessenberg;
};

ObstructionIdeal scalar_obstruction_ideal(const MatrixSL& a);

// Maximal ideals modulo which A is scalar.
PrimeSupport pi_support(const MatrixSL& a);

struct DecisionTerm {
  std::size_t gen = 0;
  std::string source;  // "direct" or the certificate label
  Int t;
  Int coefficient;
  std::size_t length = 0;
};

struct Decision {
  bool yes = false;
  bool all_primes = false;
  Int common_prime;  // NO only
  std::vector<PrimeSupport> supports;
  std::vector<DecisionTerm> terms;  // YES only
  ConjWord word;                    // YES only: evaluates to E_{1,n}(1)
  std::size_t length_bound = 0;     // 4 k (n+1)
  bool assume_el_generates = true;
};

Decision decide_normal_generation(const GenSet& s, bool assume_el_generates = true);

}  // namespace boundgen
