#pragma once

// Independent reference computations for the tests. Deliberately naive: they
// share no code with the library beyond the Int type.

#include <vector>

#include "boundgen/matrix.hpp"
#include "boundgen/rng.hpp"
#include "boundgen/words.hpp"

namespace oracle {

using boundgen::Int;

inline Int reduce(const Int& x, const Int& modulus) {
  if (modulus == 0)
    return x;
  Int r = x % modulus;
  if (r < 0)
    r += modulus;
  return r;
}

// Laplace expansion along the first row.
inline Int laplace_det(const std::vector<std::vector<Int>>& m) {
  const std::size_t n = m.size();
  if (n == 1)
    return m[0][0];
  Int d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0)
      continue;
    std::vector<std::vector<Int>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Int> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c)
          row.push_back(m[r][k]);
      minor.push_back(row);
    }
    Int term = m[0][c] * laplace_det(minor);
    d += (c % 2 == 0) ? term : Int(-term);
  }
  return d;
}

inline Int euclid_gcd(Int a, Int b) {
  if (a < 0)
    a = -a;
  if (b < 0)
    b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::vector<long> trial_factor(long x) {
  std::vector<long> ps;
  if (x < 0)
    x = -x;
  for (long p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      ps.push_back(p);
      while (x % p == 0)
        x /= p;
    }
  }
  if (x > 1)
    ps.push_back(x);
  return ps;
}

inline bool naive_is_prime(long p) {
  if (p < 2)
    return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

// Schoolbook product over Z followed by entrywise reduction.
inline std::vector<std::vector<Int>> multiply(const std::vector<std::vector<Int>>& a,
                                              const std::vector<std::vector<Int>>& b, const Int& modulus) {
  const std::size_t n = a.size();
  std::vector<std::vector<Int>> c(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Int s = 0;
      for (std::size_t k = 0; k < n; ++k)
        s += a[i][k] * b[k][j];
      c[i][j] = reduce(s, modulus);
    }
  return c;
}

inline std::vector<std::vector<Int>> identity_rows(int n) {
  std::vector<std::vector<Int>> r(n, std::vector<Int>(n, Int(0)));
  for (int i = 0; i < n; ++i)
    r[i][i] = 1;
  return r;
}

// Random element of SL(n, R) as a product of `steps` random elementary
// matrices with entries in [-bound, bound].
inline boundgen::MatrixSL random_sl(boundgen::SplitMix64& rng, const boundgen::Ring& ring, int n, int steps,
                                    long bound) {
  std::vector<std::vector<Int>> m = identity_rows(n);
  for (int s = 0; s < steps; ++s) {
    int i = static_cast<int>(rng.below(n));
    int j = static_cast<int>(rng.below(n - 1));
    if (j >= i)
      ++j;
    Int x = rng.range(-bound, bound);
    // row_i += x * row_j
    for (int k = 0; k < n; ++k)
      m[i][k] = reduce(m[i][k] + x * m[j][k], ring.modulus());
  }
  return boundgen::MatrixSL::from_rows(ring, m);
}

using Rows = std::vector<std::vector<Int>>;

// Inverse of a determinant-one matrix as its adjugate, via cofactors.
inline Rows adjugate(const Rows& m, const Int& modulus) {
  const std::size_t n = m.size();
  Rows adj(n, std::vector<Int>(n, Int(0)));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Rows minor;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == r)
          continue;
        std::vector<Int> row;
        for (std::size_t k = 0; k < n; ++k)
          if (k != c)
            row.push_back(m[i][k]);
        minor.push_back(row);
      }
      Int cof = laplace_det(minor);
      adj[c][r] = reduce((r + c) % 2 == 0 ? cof : Int(-cof), modulus);
    }
  return adj;
}

// Product of the letters c g^e c^-1, left to right, using only schoolbook arithmetic.
inline Rows eval_word(const boundgen::ConjWord& w, const boundgen::GenSet& s) {
  const Int modulus = s.ring().modulus();
  Rows acc = identity_rows(s.n());
  for (const boundgen::Letter& l : w.letters) {
    Rows g = s[l.gen].matrix().rows();
    if (l.exponent < 0)
      g = adjugate(g, modulus);
    Rows c = l.conjugator.matrix().rows();
    acc = multiply(acc, multiply(multiply(c, g, modulus), adjugate(c, modulus), modulus), modulus);
  }
  return acc;
}

}  // namespace oracle
