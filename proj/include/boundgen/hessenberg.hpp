#pragma once

#include <vector>

#include "boundgen/matrix.hpp"

namespace boundgen {

// a * A = (t, 0, ..., 0) with t the canonical gcd of a.
struct RowReduction {
  Int t;
  MatrixSL A;
};

RowReduction gcd_reduce_row(const std::vector<Int>& a, const Ring& ring);
// Q * a = (t, 0, ..., 0)^T; Q is the transpose of the row reduction.
RowReduction gcd_reduce_col(const std::vector<Int>& a, const Ring& ring);

// P M P^-1 = H, H upper Hessenberg, P = diag(1, *).
struct HessenbergCert {
  MatrixSL H;
  MatrixSL P;
};

HessenbergCert to_hessenberg(const MatrixSL& m);

// C X C^-1 = E_{1,n}(t) for a unipotent X described by the caller.
struct Normalizer {
  Int t;
  MatrixSL C;
};

// X = I + sum_{i<k} a_i e_{i,k}, a = (a_1, ..., a_{k-1}).
Normalizer unicol_to_elementary(const std::vector<Int>& a, int k, int n, const Ring& ring);
// X = I + c e_k^T with c_k = 0 (c has n entries).
Normalizer column_unipotent_to_elementary(const std::vector<Int>& c, int k, const Ring& ring);
// X = I + e_k r^T with r_k = 0.
Normalizer row_unipotent_to_elementary(const std::vector<Int>& r, int k, const Ring& ring);

}  // namespace boundgen
