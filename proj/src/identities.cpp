#include "boundgen/identities.hpp"

#include <algorithm>
#include <functional>

#include "boundgen/error.hpp"
#include "boundgen/factorize.hpp"
#include "boundgen/hessenberg.hpp"
#include "boundgen/ideals.hpp"
#include "boundgen/rng.hpp"

namespace boundgen {

bool IdentityReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.failures == 0; });
}

namespace {

int pick(SplitMix64& rng, int lo, int hi) { return static_cast<int>(rng.range(lo, hi)); }

// Product of `steps` random elementary matrices E_{i,j}(x), |x| <= bound.
MatrixSL random_sl(SplitMix64& rng, const Ring& ring, int n, int steps, long bound) {
  MatrixSL a = MatrixSL::identity(ring, n);
  for (int s = 0; s < steps; ++s) {
    int i = pick(rng, 1, n);
    int j = pick(rng, 1, n - 1);
    if (j >= i)
      ++j;
    a = a * elem(i, j, rng.range(-bound, bound), n, ring);
  }
  return a;
}

Int max_abs_entry(const MatrixSL& a) {
  Int m = 0;
  for (int i = 1; i <= a.n(); ++i)
    for (int j = 1; j <= a.n(); ++j)
      m = std::max(m, Int(abs(a.at(i, j))));
  return m;
}

// Runs `draw` count times; a false return or an exception is a failure.
IdentityCheck run_family(const std::string& name, std::size_t count, const std::function<bool(std::string&)>& draw) {
  IdentityCheck c;
  c.name = name;
  for (std::size_t t = 0; t < count; ++t) {
    std::string what;
    bool ok = false;
    try {
      ok = draw(what);
    } catch (const std::exception& e) {
      what = e.what();
    }
    ++c.draws;
    if (!ok) {
      ++c.failures;
      if (c.first_failure.empty())
        c.first_failure = "draw " + std::to_string(t) + ": " + what;
    }
  }
  return c;
}

}  // namespace

IdentityCheck check_double_commutators(const std::string& ring_text, std::uint64_t seed, std::size_t count,
                                       long entry_bound) {
  const Ring ring = Ring::parse(ring_text);
  SplitMix64 rng(seed);
  return run_family("double-commutator " + ring_text, count, [&](std::string& what) {
    // Rejection sampling for an admissible instance.
    while (true) {
      int n = pick(rng, 3, 5);
      int i = pick(rng, 1, n), j = pick(rng, 1, n), k = pick(rng, 1, n), l = pick(rng, 1, n);
      if (i == l || j == i || k == l)
        continue;
      MatrixSL a = random_sl(rng, ring, n, pick(rng, 1, 2 * n), 2);
      if (a.at(l, i) != 0 || (ring.is_integers() && max_abs_entry(a) > entry_bound))
        continue;
      Int x = ring.normalize(rng.range(-entry_bound, entry_bound));
      MatrixSL direct = commutator(commutator(a, elem(i, j, 1, n, ring)), elem(k, l, x, n, ring));
      MatrixSL closed = double_commutator_closed_form(a, i, j, k, l, x);
      what = "A = " + a.to_string() + ", (i,j,k,l) = (" + std::to_string(i) + "," + std::to_string(j) + "," +
             std::to_string(k) + "," + std::to_string(l) + "), x = " + x.get_str();
      return closed == direct;
    }
  });
}

IdentityCheck check_steinberg(std::uint64_t seed, std::size_t count) {
  SplitMix64 rng(seed);
  const Ring Z = Ring::integers();
  return run_family("steinberg", count, [&](std::string& what) {
    while (true) {
      int n = pick(rng, 3, 5);
      ElemSpec e1{pick(rng, 1, n), pick(rng, 1, n), rng.range(-50, 50)};
      ElemSpec e2{pick(rng, 1, n), pick(rng, 1, n), rng.range(-50, 50)};
      if (e1.i == e1.j || e2.i == e2.j || e1.i == e2.j)
        continue;
      auto symbolic = steinberg_commutator(e1, e2, n, Z);
      MatrixSL exact = commutator(elem(e1, n, Z), elem(e2, n, Z));
      what = "E" + std::to_string(e1.i) + std::to_string(e1.j) + "(" + e1.x.get_str() + "), E" + std::to_string(e2.i) +
             std::to_string(e2.j) + "(" + e2.x.get_str() + ")";
      return symbolic ? exact == elem(*symbolic, n, Z) : exact.is_identity();
    }
  });
}

IdentityCheck check_semilocal(const std::string& ring_text, int n, std::uint64_t seed, std::size_t count) {
  const Ring ring = Ring::parse(ring_text);
  SplitMix64 rng(seed);
  const long l = ring.modulus().get_si();
  return run_family("semilocal SL(" + std::to_string(n) + "," + ring_text + ")", count, [&](std::string& what) {
    MatrixSL a = random_sl(rng, ring, n, 4 * n, l);
    ElemFactorization f = factor_semilocal(a);
    Certificate c = make_certificate(f.gens, f.word);
    VerifyResult v = verify(c);
    what = "A = " + a.to_string() + ", length " + std::to_string(f.word.length());
    return v.ok && c.target == a && f.word.length() <= static_cast<std::size_t>(3 * (n - 1));
  });
}

IdentityReport check_identities(std::uint64_t seed, std::size_t count) {
  IdentityReport rep;
  rep.seed = seed;
  // Each family gets its own stream so that adding families does not shift others.
  SplitMix64 seeds(seed);
  rep.checks.push_back(check_double_commutators("Z", seeds.next(), count, 9));
  rep.checks.push_back(check_double_commutators("Zmod:12", seeds.next(), count, 11));
  rep.checks.push_back(check_steinberg(seeds.next(), count));
  rep.checks.push_back(check_semilocal("Zmod:12", 3, seeds.next(), count));
  rep.checks.push_back(check_semilocal("Zmod:4", 4, seeds.next(), count));

  {
    SplitMix64 rng(seeds.next());
    rep.checks.push_back(run_family("hessenberg", count, [&](std::string& what) {
      const Ring ring = rng.below(2) ? Ring::integers() : Ring::residue(12);
      int n = pick(rng, 3, 5);
      MatrixSL m = random_sl(rng, ring, n, 2 * n, 5);
      HessenbergCert h = to_hessenberg(m);
      what = "M = " + m.to_string();
      bool fixes_e1 = true;
      for (int k = 2; k <= n; ++k)
        fixes_e1 = fixes_e1 && h.P.at(1, k) == 0 && h.P.at(k, 1) == 0;
      return h.H.is_upper_hessenberg() && h.P * m * h.P.inverse() == h.H && h.P.at(1, 1) == 1 && fixes_e1;
    }));
  }
  {
    SplitMix64 rng(seeds.next());
    rep.checks.push_back(run_family("word-calculus", count, [&](std::string& what) {
      const Ring ring = rng.below(2) ? Ring::integers() : Ring::residue(10);
      int n = pick(rng, 2, 4);
      std::vector<MatrixSL> elems;
      for (int g = 0; g < 3; ++g) {
        MatrixSL a = random_sl(rng, ring, n, 3, 3);
        if (std::find(elems.begin(), elems.end(), a) == elems.end())
          elems.push_back(a);
      }
      GenSet s(elems);
      ConjWord w;
      for (int t = pick(rng, 0, 5); t > 0; --t)
        w.push(rng.below(s.size()), rng.below(2) ? 1 : -1, random_sl(rng, ring, n, 2, 3));
      MatrixSL v = eval(w, s);
      what = "word of length " + std::to_string(w.length());
      return eval(invert(w), s) == v.inverse() && invert(w).length() == w.length() &&
             eval(transpose_word(w), s.transposed()) == v.transpose() && eval(concat(w, invert(w)), s).is_identity();
    }));
  }
  {
    SplitMix64 rng(seeds.next());
    rep.checks.push_back(run_family("offdiag-certificate", count, [&](std::string& what) {
      const Ring ring = rng.below(2) ? Ring::integers() : Ring::residue(12);
      int n = pick(rng, 3, 4);
      MatrixSL a = random_sl(rng, ring, n, 2 * n, 4);
      int m = pick(rng, 1, n);
      ECertificate c = offdiag_ideal(a, m);
      Int x = rng.range(-6, 6);
      ConjWord w = c.word(x);
      what = "A = " + a.to_string() + ", m = " + std::to_string(m);
      return w.length() == 4 && eval(w, GenSet({a})) == c.target(x);
    }));
  }
  {
    SplitMix64 rng(seeds.next());
    rep.checks.push_back(run_family("normgen-certificate", count, [&](std::string& what) {
      const Ring Z = Ring::integers();
      int n = pick(rng, 3, 4);
      std::vector<MatrixSL> elems;
      for (int g = 0; g < 2; ++g) {
        MatrixSL a = random_sl(rng, Z, n, 3, 6);
        if (std::find(elems.begin(), elems.end(), a) == elems.end())
          elems.push_back(a);
      }
      GenSet s(elems);
      Decision d = decide_normal_generation(s);
      what = "S of size " + std::to_string(s.size());
      if (d.yes)
        return eval(d.word, s) == elem(1, n, 1, n, Z) && d.word.length() <= d.length_bound;
      if (d.all_primes)
        return std::all_of(elems.begin(), elems.end(), [](const MatrixSL& a) { return a.is_scalar(); });
      const Ring fp = Ring::prime_field(d.common_prime);
      return std::all_of(elems.begin(), elems.end(), [&](const MatrixSL& a) { return a.reduce(fp).is_scalar(); });
    }));
  }
  return rep;
}

}  // namespace boundgen
