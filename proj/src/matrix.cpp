#include "boundgen/matrix.hpp"

#include <sstream>

#include "boundgen/error.hpp"

namespace boundgen {

Matrix::Matrix(const Ring& ring, int n) : ring_(ring), n_(n) {
  if (n < 1 || n > kMaxDim)
    fail(ErrorCode::DimMismatch, "dimension " + std::to_string(n) + " outside [1, " + std::to_string(kMaxDim) + "]");
  a_.assign(static_cast<std::size_t>(n) * n, Int(0));
}

Matrix Matrix::identity(const Ring& ring, int n) {
  Matrix m(ring, n);
  for (int i = 1; i <= n; ++i)
    m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(const Ring& ring, const std::vector<std::vector<Int>>& rows) {
  int n = static_cast<int>(rows.size());
  Matrix m(ring, n);
  for (int i = 1; i <= n; ++i) {
    if (static_cast<int>(rows[i - 1].size()) != n)
      fail(ErrorCode::DimMismatch, "row " + std::to_string(i) + " has " + std::to_string(rows[i - 1].size()) +
                                       " entries, expected " + std::to_string(n));
    for (int j = 1; j <= n; ++j)
      m.set(i, j, rows[i - 1][j - 1]);
  }
  return m;
}

std::size_t Matrix::idx(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_)
    fail(ErrorCode::BadIndex, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
}

void Matrix::check_compatible(const Matrix& o) const {
  if (ring_ != o.ring_)
    fail(ErrorCode::RingMismatch, ring_.to_string() + " vs " + o.ring_.to_string());
  if (n_ != o.n_)
    fail(ErrorCode::DimMismatch, std::to_string(n_) + " vs " + std::to_string(o.n_));
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_compatible(o);
  Matrix r(ring_, n_);
  const std::size_t n = n_;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Int& aik = a_[i * n + k];
      if (aik == 0)
        continue;
      for (std::size_t j = 0; j < n; ++j)
        mpz_addmul(r.a_[i * n + j].get_mpz_t(), aik.get_mpz_t(), o.a_[k * n + j].get_mpz_t());
    }
  }
  if (ring_.is_finite()) {
    for (auto& v : r.a_)
      v = ring_.normalize(v);
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_compatible(o);
  Matrix r(ring_, n_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = ring_.add(a_[i], o.a_[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_compatible(o);
  Matrix r(ring_, n_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = ring_.sub(a_[i], o.a_[i]);
  return r;
}

Matrix Matrix::scaled(const Int& c) const {
  Matrix r(ring_, n_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = ring_.mul(a_[i], c);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(ring_, n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      r.a_[r.idx(j, i)] = at(i, j);
  return r;
}

Matrix Matrix::reduce(const Ring& target) const {
  if (target.is_integers() && !ring_.is_integers())
    fail(ErrorCode::RingMismatch, "cannot lift " + ring_.to_string() + " to Z");
  if (ring_.is_finite() && ring_.modulus() % target.modulus() != 0)
    fail(ErrorCode::RingMismatch, target.to_string() + " is not a quotient of " + ring_.to_string());
  Matrix r(target, n_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = target.normalize(a_[i]);
  return r;
}

std::vector<Int> Matrix::charpoly() const {
  // p holds det(lambda I - A_r) for the leading r x r block, highest degree first.
  std::vector<Int> p{Int(1)};
  for (int r = 1; r <= n_; ++r) {
    // t = (1, -a_rr, -R C, -R A C, ..., -R A^{r-2} C)
    std::vector<Int> t(r + 1);
    t[0] = 1;
    t[1] = ring_.neg(at(r, r));
    std::vector<Int> v(r - 1);  // A_{r-1}^m C
    for (int i = 1; i < r; ++i)
      v[i - 1] = at(i, r);
    for (int m = 2; m <= r; ++m) {
      Int s = 0;
      for (int i = 1; i < r; ++i)
        s += at(r, i) * v[i - 1];
      t[m] = ring_.neg(s);
      if (m < r) {
        std::vector<Int> w(r - 1);
        for (int i = 1; i < r; ++i) {
          Int acc = 0;
          for (int k = 1; k < r; ++k)
            acc += at(i, k) * v[k - 1];
          w[i - 1] = ring_.normalize(acc);
        }
        v.swap(w);
      }
    }
    std::vector<Int> q(r + 1);
    for (int i = 0; i <= r; ++i) {
      Int acc = 0;
      for (int k = 0; k <= std::min(i, r - 1); ++k)
        acc += t[i - k] * p[k];
      q[i] = ring_.normalize(acc);
    }
    p.swap(q);
  }
  std::vector<Int> c(n_ + 1);
  for (int k = 0; k <= n_; ++k)
    c[k] = p[n_ - k];
  return c;
}

Int Matrix::det() const {
  Int c0 = charpoly()[0];
  return ring_.normalize(n_ % 2 == 0 ? c0 : Int(-c0));
}

Matrix Matrix::adjugate() const {
  // Cayley-Hamilton: A (A^{n-1} + c_{n-1} A^{n-2} + ... + c_1) = -c_0 I.
  std::vector<Int> c = charpoly();
  Matrix q = identity(ring_, n_);
  for (int k = n_ - 1; k >= 1; --k) {
    q = q * (*this);
    for (int i = 1; i <= n_; ++i)
      q.set(i, i, q.at(i, i) + c[k]);
  }
  return (n_ % 2 == 1) ? q : q.scaled(Int(-1));
}

bool Matrix::is_identity() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (at(i, j) != (i == j ? 1 : 0))
        return false;
  return true;
}

bool Matrix::is_scalar() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (i != j ? at(i, j) != 0 : at(i, i) != at(1, 1))
        return false;
  return true;
}

bool Matrix::is_upper_hessenberg() const {
  for (int i = 3; i <= n_; ++i)
    for (int j = 1; j < i - 1; ++j)
      if (at(i, j) != 0)
        return false;
  return true;
}

std::vector<std::vector<Int>> Matrix::rows() const {
  std::vector<std::vector<Int>> r(n_, std::vector<Int>(n_));
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      r[i - 1][j - 1] = at(i, j);
  return r;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 1; i <= n_; ++i) {
    os << (i > 1 ? "; " : "");
    for (int j = 1; j <= n_; ++j)
      os << (j > 1 ? " " : "") << at(i, j).get_str();
  }
  os << "] over " << ring_.to_string();
  return os.str();
}

MatrixSL::MatrixSL(const Matrix& m) : m_(m) {
  Int d = m.det();
  if (d != 1)
    fail(ErrorCode::NotSL, "determinant is " + d.get_str() + ", not 1");
}

MatrixSL MatrixSL::from_rows(const Ring& ring, const std::vector<std::vector<Int>>& rows) {
  return MatrixSL(Matrix::from_rows(ring, rows));
}

MatrixSL MatrixSL::identity(const Ring& ring, int n) { return trusted(Matrix::identity(ring, n)); }

MatrixSL MatrixSL::trusted(Matrix m) { return MatrixSL(std::move(m), TrustTag{}); }

MatrixSL MatrixSL::operator*(const MatrixSL& o) const { return trusted(m_ * o.m_); }

MatrixSL MatrixSL::inverse() const { return trusted(m_.adjugate()); }

MatrixSL MatrixSL::transpose() const { return trusted(m_.transpose()); }

MatrixSL MatrixSL::reduce(const Ring& target) const { return trusted(m_.reduce(target)); }

MatrixSL conj(const MatrixSL& g, const MatrixSL& h) { return h * g * h.inverse(); }

MatrixSL commutator(const MatrixSL& g, const MatrixSL& h) { return g * h * g.inverse() * h.inverse(); }

namespace {
void check_pair(int i, int j, int n) {
  if (i < 1 || i > n || j < 1 || j > n || i == j)
    fail(ErrorCode::BadIndex, "index pair (" + std::to_string(i) + "," + std::to_string(j) + ") invalid for n=" +
                                  std::to_string(n));
}
}  // namespace

MatrixSL elem(int i, int j, const Int& x, int n, const Ring& ring) {
  check_pair(i, j, n);
  Matrix m = Matrix::identity(ring, n);
  m.set(i, j, x);
  return MatrixSL::trusted(std::move(m));
}

MatrixSL sigma(int i, int j, int n, const Ring& ring) {
  check_pair(i, j, n);
  Matrix m = Matrix::identity(ring, n);
  m.set(i, i, 0);
  m.set(j, j, 0);
  m.set(i, j, 1);
  m.set(j, i, -1);
  return MatrixSL::trusted(std::move(m));
}

MatrixSL unit_diag(int p, int q, const Int& u, int n, const Ring& ring) {
  check_pair(p, q, n);
  Matrix m = Matrix::identity(ring, n);
  m.set(p, p, u);
  m.set(q, q, inverse(u, ring));
  return MatrixSL::trusted(std::move(m));
}

std::optional<ElemSpec> as_elementary(const MatrixSL& a) {
  std::optional<ElemSpec> found;
  const int n = a.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const Int& v = a.at(i, j);
      if (i == j) {
        if (v != 1)
          return std::nullopt;
      } else if (v != 0) {
        if (found)
          return std::nullopt;
        found = ElemSpec{i, j, v};
      }
    }
  }
  return found;
}

std::optional<ElemSpec> steinberg_commutator(const ElemSpec& e1, const ElemSpec& e2, int n, const Ring& ring) {
  check_pair(e1.i, e1.j, n);
  check_pair(e2.i, e2.j, n);
  if (e1.i == e2.j)
    fail(ErrorCode::NotApplicable, "Steinberg relation needs i != l");
  if (e1.j != e2.i)
    return std::nullopt;
  Int xy = ring.mul(e1.x, e2.x);
  if (xy == 0)
    return std::nullopt;
  return ElemSpec{e1.i, e2.j, xy};
}

MatrixSL embed(const MatrixSL& a, int n, int offset) {
  if (offset < 0 || offset + a.n() > n)
    fail(ErrorCode::DimMismatch, "cannot embed " + std::to_string(a.n()) + "x" + std::to_string(a.n()) +
                                     " block at offset " + std::to_string(offset) + " in n=" + std::to_string(n));
  Matrix m = Matrix::identity(a.ring(), n);
  for (int i = 1; i <= a.n(); ++i)
    for (int j = 1; j <= a.n(); ++j)
      m.set(offset + i, offset + j, a.at(i, j));
  return MatrixSL::trusted(std::move(m));
}

}  // namespace boundgen
