#pragma once

#include <optional>
#include <string>
#include <vector>

#include "boundgen/rings.hpp"

namespace boundgen {

constexpr int kMaxDim = 16;

// Dense square matrix over a Ring with canonical entries. Indices are 1-based.
class Matrix {
public:
  Matrix(const Ring& ring, int n);
  static Matrix identity(const Ring& ring, int n);
  static Matrix from_rows(const Ring& ring, const std::vector<std::vector<Int>>& rows);

  const Ring& ring() const { return ring_; }
  int n() const { return n_; }
  const Int& at(int i, int j) const { return a_[idx(i, j)]; }
  void set(int i, int j, const Int& v) { a_[idx(i, j)] = ring_.normalize(v); }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Int& c) const;
  Matrix transpose() const;
  Matrix reduce(const Ring& target) const;

  // Coefficients c_0..c_n of det(lambda I - M), c_n = 1 (Berkowitz, division free).
  std::vector<Int> charpoly() const;
  Int det() const;
  Matrix adjugate() const;

  bool is_identity() const;
  bool is_scalar() const;
  bool is_upper_hessenberg() const;
  bool operator==(const Matrix& o) const { return n_ == o.n_ && ring_ == o.ring_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  std::vector<std::vector<Int>> rows() const;
  std::string to_string() const;

private:
  std::size_t idx(int i, int j) const;
  void check_compatible(const Matrix& o) const;

  Ring ring_;
  int n_;
  std::vector<Int> a_;
};

// Element of SL(n, R). Construction from arbitrary entries checks det = 1;
// group operations keep the invariant without rechecking.
class MatrixSL {
public:
  explicit MatrixSL(const Matrix& m);
  static MatrixSL from_rows(const Ring& ring, const std::vector<std::vector<Int>>& rows);
  static MatrixSL identity(const Ring& ring, int n);

  const Matrix& matrix() const { return m_; }
  const Ring& ring() const { return m_.ring(); }
  int n() const { return m_.n(); }
  const Int& at(int i, int j) const { return m_.at(i, j); }

  MatrixSL operator*(const MatrixSL& o) const;
  MatrixSL inverse() const;
  MatrixSL transpose() const;
  MatrixSL reduce(const Ring& target) const;
  MatrixSL inverse_transpose() const { return inverse().transpose(); }

  bool is_identity() const { return m_.is_identity(); }
  bool is_scalar() const { return m_.is_scalar(); }
  bool is_upper_hessenberg() const { return m_.is_upper_hessenberg(); }
  bool operator==(const MatrixSL& o) const { return m_ == o.m_; }
  bool operator!=(const MatrixSL& o) const { return m_ != o.m_; }

  std::string to_string() const { return m_.to_string(); }

  // For values that are in SL by construction (products of elementary
  // matrices, block embeddings, ...). Not for external data.
  static MatrixSL trusted(Matrix m);

private:
  struct TrustTag {};
  MatrixSL(Matrix m, TrustTag) : m_(std::move(m)) {}
  Matrix m_;
};

// conj(g, h) = h g h^-1
MatrixSL conj(const MatrixSL& g, const MatrixSL& h);
// [g, h] = g h g^-1 h^-1
MatrixSL commutator(const MatrixSL& g, const MatrixSL& h);

struct ElemSpec {
  int i = 1, j = 2;
  Int x;
  bool operator==(const ElemSpec&) const = default;
};

// E_{i,j}(x) = I + x e_{i,j}
MatrixSL elem(int i, int j, const Int& x, int n, const Ring& ring);
inline MatrixSL elem(const ElemSpec& e, int n, const Ring& ring) { return elem(e.i, e.j, e.x, n, ring); }
// sigma_{i,j} = e_{i,j} - e_{j,i} + sum_{k != i,j} e_{k,k}
MatrixSL sigma(int i, int j, int n, const Ring& ring);
// diag(1,..,u,..,u^-1,..,1) with u at position p and u^-1 at position q.
MatrixSL unit_diag(int p, int q, const Int& u, int n, const Ring& ring);

// Some E_{i,j}(x) with x != 0 equal to A, if A is a non-identity elementary matrix.
std::optional<ElemSpec> as_elementary(const MatrixSL& a);

// [E_{i,j}(x), E_{k,l}(y)] for i != l: identity (nullopt) when j != k,
// E_{i,l}(xy) when j == k.
std::optional<ElemSpec> steinberg_commutator(const ElemSpec& e1, const ElemSpec& e2, int n, const Ring& ring);

// diag(I_offset, A, I) in SL(n).
MatrixSL embed(const MatrixSL& a, int n, int offset);

}  // namespace boundgen
