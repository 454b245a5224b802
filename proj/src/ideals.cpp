#include "boundgen/ideals.hpp"

#include <algorithm>

#include "boundgen/error.hpp"
#include "boundgen/factorize.hpp"

namespace boundgen {

namespace {

std::string idx(int v) { return std::to_string(v); }

MatrixSL antidiag3(const Ring& ring) {
  return MatrixSL::trusted(Matrix::from_rows(ring, {{0, 0, 1}, {0, -1, 0}, {1, 0, 0}}));
}

}  // namespace

MatrixSL double_commutator_closed_form(const MatrixSL& a, int i, int j, int k, int l, const Int& x) {
  const Ring& ring = a.ring();
  const int n = a.n();
  MatrixSL b = a.inverse();
  Matrix m = Matrix::identity(ring, n);
  Int coef = (j != k) ? ring.mul(x, b.at(j, k)) : ring.mul(x, ring.sub(b.at(j, j), b.at(j, i)));
  for (int r = 1; r <= n; ++r)
    m.set(r, l, m.at(r, l) + coef * a.at(r, i));
  if (j == k)
    m.set(i, l, m.at(i, l) - x);
  return MatrixSL::trusted(m);
}

ConjWord double_commutator_word(std::size_t gen, int i, int j, int k, int l, const Int& x, int n,
                                const Ring& ring) {
  MatrixSL e = elem(i, j, 1, n, ring);
  MatrixSL f = elem(k, l, x, n, ring);
  // [[A,E],F] = A . E A^-1 E^-1 . (F E) A (F E)^-1 . F A^-1 F^-1
  ConjWord w;
  w.push(gen, 1, MatrixSL::identity(ring, n));
  w.push(gen, -1, e);
  w.push(gen, 1, f * e);
  w.push(gen, -1, f);
  return w;
}

DoubleCommutator double_commutator(const MatrixSL& a, int i, int j, int k, int l, const Int& x) {
  const int n = a.n();
  for (int v : {i, j, k, l})
    if (v < 1 || v > n)
      fail(ErrorCode::BadIndex, "index " + idx(v) + " outside 1.." + idx(n));
  if (i == l)
    fail(ErrorCode::PreconditionViolated, "i != l fails (i = l = " + idx(i) + ")");
  if (a.at(l, i) != 0)
    fail(ErrorCode::PreconditionViolated, "a_{l,i} = 0 fails (a_{" + idx(l) + "," + idx(i) + "} = " +
                                              a.at(l, i).get_str() + ")");
  if (j == i)
    fail(ErrorCode::PreconditionViolated, "j != i fails (j = i = " + idx(i) + ")");
  if (k == l)
    fail(ErrorCode::PreconditionViolated, "k != l fails (k = l = " + idx(k) + ")");
  const Ring& ring = a.ring();
  MatrixSL direct = commutator(commutator(a, elem(i, j, 1, n, ring)), elem(k, l, x, n, ring));
  MatrixSL closed = double_commutator_closed_form(a, i, j, k, l, x);
  ensure(direct == closed, "double commutator closed form disagrees with the direct product");
  ConjWord w = double_commutator_word(0, i, j, k, l, x, n, ring);
  ensure(eval(w, GenSet({a})) == direct, "double commutator word");
  return DoubleCommutator{direct, closed, w};
}

ConjWord ECertificate::word(const Int& x, std::size_t gen) const {
  const Ring& r = ring();
  Int z = r.mul(x, q);
  if (transposed)
    z = r.neg(z);
  ConjWord w = conjugate_word(double_commutator_word(gen, i, j, j, l, z, n(), r), normalizer);
  if (transposed) {
    // word over base^T evaluating to E_{n,1}(z t); sigma_{1,n} turns it into E_{1,n}(-z t).
    w = conjugate_word(transpose_word(w), sigma(1, n(), n(), r));
  }
  return absorb_conjugator(w, G);
}

MatrixSL ECertificate::target(const Int& x) const { return elem(1, n(), ring().mul(x, t), n(), ring()); }

ECertificate hessenberg_ideal(const MatrixSL& h, int i, int l, int j) {
  const int n = h.n();
  const Ring& ring = h.ring();
  if (!h.is_upper_hessenberg())
    fail(ErrorCode::NotHessenberg, "matrix is not upper Hessenberg");
  if (n < 3)
    fail(ErrorCode::BadIndices, "hessenberg_ideal needs n >= 3");
  for (int v : {i, l, j})
    if (v < 1 || v > n)
      fail(ErrorCode::BadIndices, "index " + idx(v) + " outside 1.." + idx(n));
  if (l <= i + 1)
    fail(ErrorCode::BadIndices, "need l > i+1 (i=" + idx(i) + ", l=" + idx(l) + ")");
  if (j == i || j == l)
    fail(ErrorCode::BadIndices, "need j not in {i, l} (j=" + idx(j) + ")");

  MatrixSL b = h.inverse();
  Int d = ring.sub(b.at(j, j), b.at(j, i));
  std::vector<Int> c(n);
  for (int m = 1; m <= n; ++m)
    c[m - 1] = ring.sub(ring.mul(d, h.at(m, i)), m == i ? Int(1) : Int(0));
  ensure(c[l - 1] == 0, "Hessenberg column entry below the subdiagonal");
  Normalizer nz = column_unipotent_to_elementary(c, l, ring);

  std::vector<Int> gens{ring.sub(ring.mul(d, h.at(i, i)), 1)};
  for (int k = 1; k <= n; ++k)
    if (k != i)
      gens.push_back(h.at(k, i));
  ensure(nz.t == gcd_many(gens, ring), "hessenberg_ideal generator");

  ECertificate cert{nz.t,
                    "hessenberg(i=" + idx(i) + ",l=" + idx(l) + ",j=" + idx(j) + ")",
                    h,
                    i,
                    j,
                    l,
                    nz.C,
                    nz.t,
                    Int(1),
                    false,
                    MatrixSL::identity(ring, n)};
  ensure(eval(cert.word(1), GenSet({h})) == cert.target(1), "hessenberg_ideal template");
  return cert;
}

ECertificate rebase(const ECertificate& c, const MatrixSL& p) {
  ECertificate r = c;
  r.G = c.G * p;
  return r;
}

ECertificate offdiag_ideal(const MatrixSL& a, int m) {
  const int n = a.n();
  const Ring& ring = a.ring();
  if (n < 3)
    fail(ErrorCode::BadIndices, "offdiag_ideal needs n >= 3");
  if (m < 1 || m > n)
    fail(ErrorCode::BadIndices, "column " + idx(m) + " outside 1.." + idx(n));
  MatrixSL s = m > 1 ? sigma(1, m, n, ring) : MatrixSL::identity(ring, n);
  HessenbergCert hc = to_hessenberg(conj(a, s));
  ECertificate e = hessenberg_ideal(hc.H, 1, n, 2);

  std::vector<Int> col;
  for (int k = 1; k <= n; ++k)
    if (k != m)
      col.push_back(a.at(k, m));
  Int t = gcd_many(col, ring);
  ensure(divides(e.t_base, t, ring), "offdiag ideal not inside the Hessenberg ideal");
  e.q = (t == 0) ? Int(0) : Int(t / e.t_base);
  e.t = t;
  e.G = hc.P * s;
  e.label = "offdiag(m=" + idx(m) + ")";
  ensure(eval(e.word(1), GenSet({a})) == e.target(1), "offdiag_ideal template");
  return e;
}

ObstructionIdeal scalar_obstruction_ideal(const MatrixSL& a) {
  const int n = a.n();
  const Ring& ring = a.ring();
  if (n < 3)
    fail(ErrorCode::BadIndices, "scalar_obstruction_ideal needs n >= 3");
  HessenbergCert hc = to_hessenberg(a);
  const MatrixSL& h = hc.H;
  MatrixSL b = h.inverse();

  std::vector<Int> igens;
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      if (r != c)
        igens.push_back(h.at(r, c));
  auto rel = [&](int bi, int ai) { return ring.sub(ring.mul(b.at(bi, bi), h.at(ai, ai)), 1); };

  std::vector<ECertificate> parts;
  parts.push_back(offdiag_ideal(h, n - 1));
  parts.back().label = "J1 " + parts.back().label;
  parts.push_back(offdiag_ideal(h, n));
  parts.back().label = "J2 " + parts.back().label;
  if (n >= 4) {
    for (int i = 2; i <= n - 2; ++i) {
      igens.push_back(rel(1, i));
      parts.push_back(hessenberg_ideal(h, i, n, 1));
      parts.back().label = "J" + idx(i + 1) + " " + parts.back().label;
    }
    igens.push_back(rel(n - 1, 1));
    igens.push_back(rel(n, 1));
    parts.push_back(hessenberg_ideal(h, 1, n, n - 1));
    parts.back().label = "J" + idx(n) + " " + parts.back().label;
    parts.push_back(hessenberg_ideal(h, 1, n - 1, n));
    parts.back().label = "J" + idx(n + 1) + " " + parts.back().label;
  } else {
    igens.push_back(rel(2, 1));
    igens.push_back(rel(1, 3));
    parts.push_back(hessenberg_ideal(h, 1, 3, 2));
    parts.back().label = "J3 " + parts.back().label;
    // C = (M H M^-1)^T is again upper Hessenberg.
    MatrixSL mm = antidiag3(ring);
    MatrixSL cm = conj(h, mm).transpose();
    ECertificate e = hessenberg_ideal(cm, 1, 3, 2);
    e.transposed = true;
    e.G = mm;
    e.label = "J4 transposed " + e.label;
    ensure(eval(e.word(1), GenSet({h})) == e.target(1), "transposed certificate");
    parts.push_back(e);
  }
  for (auto& p : parts)
    p = rebase(p, hc.P);

  ObstructionIdeal out{gcd_many(igens, ring), std::move(parts), Int(0), 0, hc};
  std::vector<Int> js;
  for (const auto& p : out.parts)
    js.push_back(p.t);
  out.J = gcd_many(js, ring);
  out.depth_total = 4 * out.parts.size();
  ensure(divides(out.J, out.I, ring), "obstruction ideal I not contained in J_1 + ... + J_{n+1}");
  return out;
}

PrimeSupport pi_support(const MatrixSL& a) {
  PrimeSupport s;
  if (a.is_scalar()) {
    s.all = true;
    return s;
  }
  const Ring& ring = a.ring();
  std::vector<Int> xs;
  for (int i = 1; i <= a.n(); ++i)
    for (int j = 1; j <= a.n(); ++j)
      xs.push_back(i == j ? ring.sub(a.at(i, i), a.at(1, 1)) : a.at(i, j));
  s = prime_support_of(gcd_many(xs, ring), ring);
  for (const Int& p : s.primes)
    ensure(a.reduce(Ring::prime_field(p)).is_scalar(), "pi_support self-check");
  return s;
}

namespace {

struct Candidate {
  std::size_t gen;
  Int t;
  bool direct;
  std::size_t order;
  // direct: A = E_{a,b}(r) and t = u r
  ElemSpec spec;
  Int unit;
  const ECertificate* cert = nullptr;
};

ConjWord direct_word(const Candidate& c, const Int& x, int n, const Ring& ring) {
  Int y = ring.mul(x, c.unit);  // E_{1,n}(x t) = E_{1,n}(y r)
  ConjWord w;
  if (ring.mul(y, c.spec.x) == 0)
    return w;
  MatrixSL na = elem_conjugacy_normalize(c.spec.i, c.spec.j, n, ring).C;
  if (ring.normalize(y) == ring.normalize(1)) {
    w.push(c.gen, 1, na);
    return w;
  }
  if (ring.normalize(y) == ring.normalize(-1)) {
    w.push(c.gen, -1, na);
    return w;
  }
  // E_{1,n}(y r) = [E_{1,2}(r), E_{2,n}(y)]
  MatrixSL k = elem_conjugacy_normalize(1, 2, n, ring).C.inverse() * na;
  w.push(c.gen, 1, k);
  w.push(c.gen, -1, elem(2, n, y, n, ring) * k);
  return w;
}

Int candidates_gcd(const std::vector<const Candidate*>& cs, const Ring& ring, std::size_t skip = SIZE_MAX) {
  std::vector<Int> ts;
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (i != skip)
      ts.push_back(cs[i]->t);
  return gcd_many(ts, ring);
}

bool assemble(const GenSet& s, std::vector<Candidate> cands, std::size_t bound, Decision& out) {
  const Ring& ring = s.ring();
  const int n = s.n();
  std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.t != b.t)
      return a.t < b.t;
    if (a.direct != b.direct)
      return a.direct;
    return a.order < b.order;
  });
  std::vector<const Candidate*> chosen;
  for (const auto& c : cands) {
    chosen.push_back(&c);
    if (candidates_gcd(chosen, ring) == 1)
      break;
  }
  ensure(candidates_gcd(chosen, ring) == 1, "ideal certificates do not sum to the unit ideal");
  for (std::size_t i = chosen.size(); i-- > 0;) {
    if (chosen.size() > 1 && candidates_gcd(chosen, ring, i) == 1)
      chosen.erase(chosen.begin() + static_cast<long>(i));
  }

  // Left-fold Bezout coefficients: sum coef_i t_i = 1.
  std::vector<Int> coef{Int(1)};
  Int g = chosen[0]->t;
  for (std::size_t i = 1; i < chosen.size(); ++i) {
    XGcd x = xgcd(g, chosen[i]->t, ring);
    for (auto& c : coef)
      c = ring.mul(c, x.s);
    coef.push_back(ring.normalize(x.t));
    g = x.g;
  }
  if (chosen.size() == 1) {
    // t itself is a unit.
    coef[0] = inverse(chosen[0]->t, ring);
  }

  ConjWord word;
  std::vector<DecisionTerm> terms;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    const Candidate& c = *chosen[i];
    ConjWord piece = c.direct ? direct_word(c, coef[i], n, ring) : c.cert->word(coef[i], c.gen);
    terms.push_back(DecisionTerm{c.gen, c.direct ? "direct" : c.cert->label, c.t, coef[i], piece.length()});
    word = concat(word, piece);
  }
  ensure(eval(word, s) == elem(1, n, 1, n, ring), "normal generation certificate does not replay");
  if (word.length() > bound)
    return false;
  out.word = std::move(word);
  out.terms = std::move(terms);
  return true;
}

}  // namespace

Decision decide_normal_generation(const GenSet& s, bool assume_el_generates) {
  const int n = s.n();
  const Ring& ring = s.ring();
  if (n < 3)
    fail(ErrorCode::InvalidArgument, "normal generation decision needs n >= 3");
  Decision d;
  d.assume_el_generates = assume_el_generates;
  d.length_bound = 4 * s.size() * static_cast<std::size_t>(n + 1);

  PrimeSupport inter{true, {}};
  for (const auto& a : s.elements()) {
    d.supports.push_back(pi_support(a));
    inter = intersect(inter, d.supports.back());
  }
  if (inter.all || !inter.primes.empty()) {
    d.yes = false;
    d.all_primes = inter.all;
    if (!inter.all)
      d.common_prime = inter.primes.front();
    else
      d.common_prime = ring.is_integers() ? Int(2) : ring.maximal_ideals().front();
    return d;
  }

  std::vector<ObstructionIdeal> obstructions;
  obstructions.reserve(s.size());
  for (const auto& a : s.elements())
    obstructions.push_back(scalar_obstruction_ideal(a));

  std::vector<Candidate> all, certs_only;
  std::size_t order = 0;
  for (std::size_t g = 0; g < s.size(); ++g) {
    if (auto e = as_elementary(s[g])) {
      Int t = canonical_associate(e->x, ring);
      if (t != 0)
        all.push_back(Candidate{g, t, true, order++, *e, unit_to_canonical(e->x, ring), nullptr});
    }
    for (const auto& p : obstructions[g].parts) {
      if (p.t == 0)
        continue;
      Candidate c{g, p.t, false, order++, ElemSpec{}, Int(1), &p};
      all.push_back(c);
      certs_only.push_back(c);
    }
  }
  if (!assemble(s, all, d.length_bound, d)) {
    bool ok = assemble(s, certs_only, d.length_bound, d);
    ensure(ok, "normal generation certificate exceeds 4k(n+1)");
  }
  d.yes = true;
  return d;
}

}  // namespace boundgen
