#include "boundgen/factorize.hpp"

#include <algorithm>

#include "boundgen/error.hpp"
#include "boundgen/hessenberg.hpp"

namespace boundgen {

namespace {

// K E_{1,n}(t) K^-1
struct ELetter {
  Int t;
  MatrixSL K;
};

using Letters = std::vector<ELetter>;

ELetter from_elementary(const ElemSpec& e, int n, const Ring& ring) {
  ElemNormalizer nz = elem_conjugacy_normalize(e.i, e.j, n, ring);
  return ELetter{ring.mul(e.x, nz.sign), nz.C.inverse()};
}

ELetter from_normalizer(const Normalizer& nz) { return ELetter{nz.t, nz.C.inverse()}; }

// Letters for diag(I_offset, block letters) in SL(n).
Letters embed_letters(const Letters& ls, int m, int n, int offset, const Ring& ring) {
  Letters out;
  if (ls.empty())
    return out;
  // E_{1+offset, m+offset} inside SL(n) corresponds to E_{1,m} in the block.
  ElemNormalizer nz = elem_conjugacy_normalize(1 + offset, m + offset, n, ring);
  MatrixSL back = nz.C.inverse();
  for (const auto& l : ls)
    out.push_back(ELetter{ring.mul(l.t, nz.sign), embed(l.K, n, offset) * back});
  return out;
}

ElemFactorization to_factorization(const Letters& ls, int n, const Ring& ring) {
  ElemFactorization f{GenSet(ring, n), ConjWord{}};
  for (const auto& l : ls) {
    Int t = ring.normalize(l.t);
    if (t == 0)
      continue;
    std::size_t g = f.gens.intern(elem(1, n, t, n, ring));
    f.word.push(g, 1, l.K);
  }
  return f;
}

Letters letters_of(const ElemFactorization& f) {
  Letters out;
  const int n = f.gens.n();
  const Ring& ring = f.gens.ring();
  for (const auto& l : f.word.letters) {
    auto e = as_elementary(f.gens[l.gen]);
    if (!e)
      fail(ErrorCode::InvalidArgument, "generator " + std::to_string(l.gen) + " is not elementary");
    ELetter x = from_elementary(*e, n, ring);
    if (l.exponent == -1)
      x.t = ring.neg(x.t);
    out.push_back(ELetter{x.t, l.conjugator * x.K});
  }
  return out;
}

Letters conj_letters(Letters ls, const MatrixSL& h) {
  for (auto& l : ls)
    l.K = h * l.K;
  return ls;
}

MatrixSL lower_block(const MatrixSL& d) {
  const int n = d.n();
  Matrix q(d.ring(), n - 1);
  for (int i = 2; i <= n; ++i)
    for (int j = 2; j <= n; ++j)
      q.set(i - 1, j - 1, d.at(i, j));
  return MatrixSL::trusted(q);
}

std::vector<Int> first_row_tail(const MatrixSL& r) {
  std::vector<Int> row(r.n(), Int(0));
  for (int j = 2; j <= r.n(); ++j)
    row[j - 1] = r.at(1, j);
  return row;
}

Letters semilocal_letters(const MatrixSL& a) {
  const int n = a.n();
  const Ring& ring = a.ring();
  if (a.is_identity())
    return {};
  if (auto e = as_elementary(a))
    return {from_elementary(*e, n, ring)};

  HessenbergCert hc = to_hessenberg(a);
  const MatrixSL& h = hc.H;
  Letters out;
  Int x = is_unit(h.at(2, 1), ring) ? Int(0) : unit_shift(h.at(2, 1), h.at(1, 1), ring);
  MatrixSL bm = elem(2, 1, x, n, ring) * h;
  const Int b21 = bm.at(2, 1);
  ensure(is_unit(b21, ring), "semilocal step: b21 is not a unit");
  MatrixSL u = elem(1, 2, ring.mul(inverse(b21, ring), ring.sub(1, bm.at(1, 1))), n, ring);
  MatrixSL c = u * bm * u.inverse();
  ensure(c.at(1, 1) == 1 && c.at(2, 1) == b21, "semilocal step: first column of C");
  MatrixSL d = elem(2, 1, ring.neg(b21), n, ring) * c;
  MatrixSL q = lower_block(d);
  MatrixSL f = embed(q, n, 1);
  MatrixSL r = d * f.inverse();

  // H = E21(-x) U^-1 [E21(b21) R F] U
  MatrixSL ui = u.inverse();
  if (x != 0)
    out.push_back(from_elementary(ElemSpec{2, 1, ring.neg(x)}, n, ring));
  Letters inner;
  inner.push_back(from_elementary(ElemSpec{2, 1, b21}, n, ring));
  if (!r.is_identity())
    inner.push_back(from_normalizer(row_unipotent_to_elementary(first_row_tail(r), 1, ring)));
  if (n > 1) {
    Letters sub = embed_letters(semilocal_letters(q), n - 1, n, 1, ring);
    inner.insert(inner.end(), sub.begin(), sub.end());
  }
  inner = conj_letters(inner, ui);
  out.insert(out.end(), inner.begin(), inner.end());
  return conj_letters(out, hc.P.inverse());
}

Letters stable_letters(const MatrixSL& a, int m, const BaseFactorizer& base, std::size_t base_bound) {
  const int n = a.n();
  const Ring& ring = a.ring();
  if (n == m) {
    ElemFactorization f = [&] {
      try {
        return base(a);
      } catch (const Error& e) {
        fail(ErrorCode::BaseFactorizerFailed, std::string("base factorizer threw: ") + e.what());
      }
    }();
    if (f.gens.n() != m || eval(f.word, f.gens) != a)
      fail(ErrorCode::BaseFactorizerFailed, "base factorizer word does not evaluate to its input");
    if (f.word.length() > base_bound)
      fail(ErrorCode::BaseFactorizerFailed, "base word of length " + std::to_string(f.word.length()) +
                                                " exceeds the declared bound " + std::to_string(base_bound));
    return letters_of(f);
  }
  HessenbergCert hc = to_hessenberg(a);
  const MatrixSL& h = hc.H;
  const Int av = h.at(1, 1), bv = h.at(2, 1);
  XGcd g = xgcd(av, bv, ring);
  ensure(g.g == 1, "stable range step: first column not unimodular");
  Matrix x1m = Matrix::identity(ring, n);
  x1m.set(3, 1, g.s);
  x1m.set(3, 2, g.t);
  MatrixSL x1 = MatrixSL::trusted(x1m);
  MatrixSL x2 = elem(1, 3, ring.sub(1, av), n, ring);
  Matrix x3m = Matrix::identity(ring, n);
  x3m.set(2, 1, ring.neg(bv));
  x3m.set(3, 1, -1);
  MatrixSL x3 = MatrixSL::trusted(x3m);
  MatrixSL m1 = x3 * x2 * x1 * h;
  for (int i = 1; i <= n; ++i)
    ensure(m1.at(i, 1) == (i == 1 ? 1 : 0), "stable range step: block form");
  MatrixSL bblk = lower_block(m1);
  MatrixSL f = embed(bblk, n, 1);
  MatrixSL r = f.inverse() * m1;  // (1 y; 0 I)

  // H = X1^-1 X2^-1 X3^-1 F R
  Letters out;
  std::vector<Int> r1(n, Int(0));
  r1[0] = ring.neg(g.s);
  r1[1] = ring.neg(g.t);
  if (r1[0] != 0 || r1[1] != 0)
    out.push_back(from_normalizer(row_unipotent_to_elementary(r1, 3, ring)));
  if (ring.sub(av, 1) != 0)
    out.push_back(from_elementary(ElemSpec{1, 3, ring.sub(av, 1)}, n, ring));
  std::vector<Int> c3(n, Int(0));
  c3[1] = bv;
  c3[2] = 1;
  out.push_back(from_normalizer(column_unipotent_to_elementary(c3, 1, ring)));
  Letters sub = embed_letters(stable_letters(bblk, m, base, base_bound), n - 1, n, 1, ring);
  out.insert(out.end(), sub.begin(), sub.end());
  if (!r.is_identity())
    out.push_back(from_normalizer(row_unipotent_to_elementary(first_row_tail(r), 1, ring)));
  return conj_letters(out, hc.P.inverse());
}

}  // namespace

ElemNormalizer elem_conjugacy_normalize(int i, int j, int n, const Ring& ring) {
  if (i < 1 || i > n || j < 1 || j > n || i == j)
    fail(ErrorCode::BadIndex, "no elementary matrix E_{" + std::to_string(i) + "," + std::to_string(j) + "}");
  // Track where e_i and e_j go (with signs) as sigmas are applied on the left.
  MatrixSL c = MatrixSL::identity(ring, n);
  int pi = i, pj = j, si = 1, sj = 1;
  auto apply = [&](int a, int b) {
    // sigma_{a,b}: e_b -> e_a, e_a -> -e_b
    c = sigma(a, b, n, ring) * c;
    auto move = [&](int& pos, int& sgn) {
      if (pos == b) {
        pos = a;
      } else if (pos == a) {
        pos = b;
        sgn = -sgn;
      }
    };
    move(pi, si);
    move(pj, sj);
  };
  if (pi != 1)
    apply(1, pi);
  if (pj != n)
    apply(n, pj);
  int sign = si * sj;
  if (sign == -1 && n >= 3) {
    int mid = 2;
    c = unit_diag(1, mid, Int(-1), n, ring) * c;
    sign = 1;
  }
  ensure(pi == 1 && pj == n, "elementary normalizer positions");
  ensure(conj(elem(i, j, 1, n, ring), c) == elem(1, n, sign, n, ring), "elementary normalizer");
  return ElemNormalizer{c, sign};
}

ConjWord elem_as_two(int i, int j, const Int& x, int n, const Ring& ring, std::size_t gen) {
  if (n < 3)
    fail(ErrorCode::BadIndex, "elem_as_two needs n >= 3");
  // E_{1,2}(x) = [E_{1,n}(1), E_{n,2}(x)]; K E_{1,2}(x) K^-1 = E_{i,j}(x).
  ElemNormalizer to12 = elem_conjugacy_normalize(1, 2, n, ring);
  ElemNormalizer toij = elem_conjugacy_normalize(i, j, n, ring);
  MatrixSL k = toij.C.inverse() * to12.C;
  ConjWord w;
  w.push(gen, 1, k);
  w.push(gen, -1, k * elem(n, 2, x, n, ring));
  return w;
}

ElemFactorization factor_semilocal(const MatrixSL& a) {
  const Ring& ring = a.ring();
  if (ring.is_integers())
    fail(ErrorCode::UnsupportedRing, "factor_semilocal needs a ring with finitely many maximal ideals");
  ElemFactorization f = to_factorization(semilocal_letters(a), a.n(), ring);
  ensure(f.word.length() <= 3 * static_cast<std::size_t>(a.n() - 1), "semilocal word exceeds 3(n-1)");
  ensure(eval(f.word, f.gens) == a, "semilocal word does not replay");
  return f;
}

ElemFactorization stable_range_reduce(const MatrixSL& a, int m, const BaseFactorizer& base,
                                      std::size_t base_bound) {
  const int n = a.n();
  if (m < 2 || m > n)
    fail(ErrorCode::InvalidArgument, "base dimension must satisfy 2 <= m <= n");
  ElemFactorization f = to_factorization(stable_letters(a, m, base, base_bound), n, a.ring());
  ensure(f.word.length() <= base_bound + 4 * static_cast<std::size_t>(n - m), "stable range word too long");
  ensure(eval(f.word, f.gens) == a, "stable range word does not replay");
  return f;
}

ElemFactorization factor_euclid(const MatrixSL& a) {
  const Ring& ring = a.ring();
  if (!ring.is_integers())
    fail(ErrorCode::UnsupportedRing, "factor_euclid works over Z");
  const int n = a.n();
  std::vector<std::vector<Int>> m = a.matrix().rows();
  std::vector<ElemSpec> ops;  // row_r += x row_s, applied in order
  auto op = [&](int r, int s, const Int& x) {
    if (x == 0)
      return;
    for (int c = 0; c < n; ++c)
      m[r][c] += x * m[s][c];
    ops.push_back(ElemSpec{r + 1, s + 1, x});
  };
  for (int p = 0; p < n; ++p) {
    for (;;) {
      int piv = -1;
      for (int r = p; r < n; ++r)
        if (m[r][p] != 0 && (piv < 0 || abs(m[r][p]) < abs(m[piv][p])))
          piv = r;
      ensure(piv >= 0, "euclid: zero column");
      bool single = true;
      for (int r = p; r < n; ++r) {
        if (r == piv || m[r][p] == 0)
          continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), m[r][p].get_mpz_t(), m[piv][p].get_mpz_t());
        op(r, piv, -q);
        if (m[r][p] != 0)
          single = false;
      }
      if (single) {
        if (piv != p) {
          op(p, piv, 1);
          op(piv, p, -1);
        }
        break;
      }
    }
    if (m[p][p] == -1) {
      ensure(p + 1 < n, "euclid: determinant sign");
      op(p + 1, p, -1);
      op(p, p + 1, 2);
      op(p + 1, p, -1);
    }
    ensure(m[p][p] == 1, "euclid: pivot is not 1");
    for (int r = 0; r < n; ++r)
      if (r != p)
        op(r, p, -m[r][p]);
  }
  // ops_k ... ops_1 A = I, so A = ops_1^-1 ... ops_k^-1.
  Letters ls;
  for (const auto& e : ops)
    ls.push_back(from_elementary(ElemSpec{e.i, e.j, -e.x}, n, ring));
  ElemFactorization f = to_factorization(ls, n, ring);
  ensure(eval(f.word, f.gens) == a, "euclid word does not replay");
  return f;
}

ElemFactorization normalize_elementary_word(const GenSet& gens, const ConjWord& word) {
  ElemFactorization in{gens, word};
  return to_factorization(letters_of(in), gens.n(), gens.ring());
}

}  // namespace boundgen
