#include "boundgen/hessenberg.hpp"

#include "boundgen/error.hpp"

namespace boundgen {

namespace {

bool is_unipotent_column(const MatrixSL& x, int k) {
  for (int i = 1; i <= x.n(); ++i)
    for (int j = 1; j <= x.n(); ++j) {
      if (j == k && i != k)
        continue;
      if (x.at(i, j) != (i == j ? 1 : 0))
        return false;
    }
  return true;
}

}  // namespace

RowReduction gcd_reduce_row(const std::vector<Int>& a, const Ring& ring) {
  const int n = static_cast<int>(a.size());
  if (n < 1)
    fail(ErrorCode::InvalidArgument, "gcd_reduce_row needs a nonempty row");
  std::vector<Int> v(n);
  for (int i = 0; i < n; ++i)
    v[i] = ring.normalize(a[i]);
  Matrix acc = Matrix::identity(ring, n);
  for (int k = 2; k <= n; ++k) {
    const Int x = v[0], y = v[k - 1];
    if (y == 0)
      continue;
    // Integer Bezout data on the lifts; det of the block is exactly 1 over Z.
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    Matrix blk = Matrix::identity(ring, n);
    blk.set(1, 1, s);
    blk.set(1, k, -(y / g));
    blk.set(k, 1, t);
    blk.set(k, k, x / g);
    acc = acc * blk;
    v[0] = ring.normalize(g);
    v[k - 1] = 0;
  }
  Int t = v[0];
  if (n >= 2) {
    Int u = unit_to_canonical(t, ring);
    if (u != 1) {
      acc = acc * unit_diag(1, 2, u, n, ring).matrix();
      t = ring.mul(t, u);
    }
  }
  RowReduction r{t, MatrixSL::trusted(acc)};
  // a * A = (t, 0, ..., 0)
  for (int j = 1; j <= n; ++j) {
    Int s = 0;
    for (int i = 1; i <= n; ++i)
      s += a[i - 1] * r.A.at(i, j);
    ensure(ring.normalize(s) == (j == 1 ? t : Int(0)), "gcd_reduce_row identity");
  }
  return r;
}

RowReduction gcd_reduce_col(const std::vector<Int>& a, const Ring& ring) {
  RowReduction r = gcd_reduce_row(a, ring);
  r.A = r.A.transpose();
  return r;
}

HessenbergCert to_hessenberg(const MatrixSL& m) {
  const int n = m.n();
  const Ring& ring = m.ring();
  MatrixSL h = m;
  MatrixSL p = MatrixSL::identity(ring, n);
  for (int c = 1; c <= n - 2; ++c) {
    bool done = true;
    for (int i = c + 2; i <= n; ++i)
      if (h.at(i, c) != 0)
        done = false;
    if (done)
      continue;
    std::vector<Int> tail;
    for (int i = c + 1; i <= n; ++i)
      tail.push_back(h.at(i, c));
    MatrixSL q = embed(gcd_reduce_col(tail, ring).A, n, c);
    h = q * h * q.inverse();
    p = q * p;
  }
  ensure(h.is_upper_hessenberg(), "to_hessenberg result not Hessenberg");
  ensure(p * m * p.inverse() == h, "to_hessenberg conjugation");
  return HessenbergCert{h, p};
}

Normalizer unicol_to_elementary(const std::vector<Int>& a, int k, int n, const Ring& ring) {
  if (k < 2 || k > n || static_cast<int>(a.size()) != k - 1)
    fail(ErrorCode::BadIndex, "unicol_to_elementary needs 2 <= k <= n and k-1 entries");
  Matrix x = Matrix::identity(ring, n);
  for (int i = 1; i < k; ++i)
    x.set(i, k, a[i - 1]);
  MatrixSL xm = MatrixSL::trusted(x);

  Normalizer out{Int(0), MatrixSL::identity(ring, n)};
  if (k - 1 >= 2) {
    RowReduction d = gcd_reduce_col(a, ring);
    out.t = d.t;
    out.C = embed(d.A, n, 0);
  } else {
    out.t = ring.normalize(a[0]);
    if (n >= 3) {
      Int u = unit_to_canonical(out.t, ring);
      if (u != 1) {
        int j = (k == 2) ? 3 : 2;
        out.C = unit_diag(1, j, u, n, ring);
        out.t = ring.mul(out.t, u);
      }
    }
  }
  if (k != n)
    out.C = sigma(n, k, n, ring) * out.C;
  ensure(conj(xm, out.C) == elem(1, n, out.t, n, ring), "unicol_to_elementary");
  return out;
}

Normalizer column_unipotent_to_elementary(const std::vector<Int>& c, int k, const Ring& ring) {
  const int n = static_cast<int>(c.size());
  if (n < 2 || k < 1 || k > n)
    fail(ErrorCode::BadIndex, "column index out of range");
  if (ring.normalize(c[k - 1]) != 0)
    fail(ErrorCode::PreconditionViolated, "column unipotent needs a zero diagonal entry");
  Matrix x = Matrix::identity(ring, n);
  for (int i = 1; i <= n; ++i)
    if (i != k)
      x.set(i, k, c[i - 1]);
  MatrixSL xm = MatrixSL::trusted(x);

  // sigma_{n,k} moves the column to position n; then reduce coordinates 1..n-1.
  MatrixSL s = MatrixSL::identity(ring, n);
  std::vector<Int> moved(c.begin(), c.end());
  if (k != n) {
    s = sigma(n, k, n, ring);
    moved[k - 1] = ring.neg(c[n - 1]);
    moved[n - 1] = 0;
  }
  std::vector<Int> head(moved.begin(), moved.end() - 1);
  Normalizer out = unicol_to_elementary(head, n, n, ring);
  out.C = out.C * s;
  ensure(is_unipotent_column(xm, k) && conj(xm, out.C) == elem(1, n, out.t, n, ring),
         "column_unipotent_to_elementary");
  return out;
}

Normalizer row_unipotent_to_elementary(const std::vector<Int>& r, int k, const Ring& ring) {
  const int n = static_cast<int>(r.size());
  Normalizer col = column_unipotent_to_elementary(r, k, ring);
  // C X^T C^-1 = E_{1,n}(t)  =>  C^-T X C^T = E_{n,1}(t), and sigma_{1,n} turns that into E_{1,n}(-t).
  Normalizer out{ring.neg(col.t), sigma(1, n, n, ring) * col.C.inverse_transpose()};
  Matrix x = Matrix::identity(ring, n);
  for (int j = 1; j <= n; ++j)
    if (j != k)
      x.set(k, j, r[j - 1]);
  ensure(conj(MatrixSL::trusted(x), out.C) == elem(1, n, out.t, n, ring), "row_unipotent_to_elementary");
  return out;
}

}  // namespace boundgen
