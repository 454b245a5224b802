#include "boundgen/witness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "boundgen/error.hpp"
#include "boundgen/ideals.hpp"

namespace boundgen {

namespace {

std::string str(const Int& x) { return x.get_str(); }
std::string str(const mpq_class& x) { return x.get_str(); }

Int pow_int(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

// Least x >= 1 with (m x)^delta > order.
Int least_above_root(const Int& order, const Int& delta, long m) {
  unsigned long d = delta.get_ui();
  Int root;
  mpz_root(root.get_mpz_t(), order.get_mpz_t(), d);  // floor(order^(1/d))
  // smallest y with y^d > order is root + 1; then x = ceil(y / m)
  Int y = root + 1;
  Int x = (y + m - 1) / m;
  while (x > 1 && pow_int(m * (x - 1), d) > order)
    x -= 1;
  while (pow_int(m * x, d) <= order)
    x += 1;
  return x;
}

}  // namespace

LowerBoundWitness build_lower_witness(int n, std::vector<Int> primes) {
  if (n < 3)
    fail(ErrorCode::InvalidArgument, "lower bound witness needs n >= 3, got " + std::to_string(n));
  if (primes.empty())
    fail(ErrorCode::InvalidArgument, "at least one prime is required");
  for (const Int& p : primes)
    if (!is_prime(p))
      fail(ErrorCode::NotPrime, str(p) + " is not prime");
  std::sort(primes.begin(), primes.end());
  for (std::size_t i = 1; i < primes.size(); ++i)
    if (primes[i] == primes[i - 1])
      fail(ErrorCode::DuplicatePrime, str(primes[i]) + " listed twice");

  const Ring Z = Ring::integers();
  LowerBoundWitness w{static_cast<int>(primes.size()), n, primes, {}, {}, GenSet(Z, n), {}, {}, {}, false, 0,
                      true};
  const int k = w.k;
  Int product = 1;
  for (const Int& p : primes)
    product *= p;
  for (int i = 0; i < k; ++i) {
    w.r.push_back(product / primes[i]);
    w.gens.add(elem(1, n, w.r.back(), n, Z));
  }

  // f_i = r_i^{-1} mod p_i, then absorb the excess multiple of the product into f_k.
  Int total = 0;
  for (int i = 0; i < k; ++i) {
    Int f;
    int ok = mpz_invert(f.get_mpz_t(), w.r[i].get_mpz_t(), primes[i].get_mpz_t());
    ensure(ok != 0, "r_i invertible modulo p_i");
    w.f.push_back(f);
    total += f * w.r[i];
  }
  ensure((total - 1) % product == 0, "CRT coefficients sum to 1 modulo the product");
  Int excess = (total - 1) / product;
  w.f[k - 1] -= excess * primes[k - 1];
  Int check = 0;
  for (int i = 0; i < k; ++i)
    check += w.f[i] * w.r[i];
  ensure(check == 1, "sum f_i r_i = 1");

  MatrixSL id = MatrixSL::identity(Z, n);
  for (int i = 0; i < k; ++i) {
    int e = w.f[i] > 0 ? 1 : -1;
    for (Int c = abs(w.f[i]); c > 0; c -= 1)
      w.crt_word.push(static_cast<std::size_t>(i), e, id);
  }
  ensure(eval(w.crt_word, w.gens) == elem(1, n, 1, n, Z), "CRT word evaluates to E_{1,n}(1)");

  // Membership table and supports.
  for (int i = 0; i < k; ++i) {
    std::vector<bool> row;
    std::vector<Int> expected;
    for (int j = 0; j < k; ++j) {
      bool in = w.r[i] % primes[j] == 0;
      row.push_back(in);
      if (j != i)
        expected.push_back(primes[j]);
    }
    w.membership.push_back(row);
    w.supports.push_back(pi_support(w.gens[i]));
    ensure(!w.supports.back().all && w.supports.back().primes == expected, "support of generator is {p_j : j != i}");
  }

  // Each generator avoids exactly one chosen prime and distinct generators
  // avoid distinct primes, so k-1 letters (conjugates of generators or their
  // inverses) avoid at most k-1 primes: the product stays congruent to I
  // modulo a remaining prime, while E_{1,n}(1) is not scalar modulo any prime.
  bool holds = true;
  std::vector<int> avoided(k, -1);
  for (int i = 0; i < k; ++i) {
    int misses = 0;
    for (int j = 0; j < k; ++j)
      if (!w.membership[i][j]) {
        ++misses;
        avoided[i] = j;
      }
    holds = holds && misses == 1;
  }
  std::vector<int> sorted = avoided;
  std::sort(sorted.begin(), sorted.end());
  holds = holds && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  PrimeSupport target = pi_support(elem(1, n, 1, n, Z));
  holds = holds && !target.all && target.primes.empty();
  // Literal premise for small k: every (k-1)-subset of supports intersects.
  if (holds && k >= 2 && k <= 16) {
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      if (__builtin_popcount(mask) != k - 1)
        continue;
      PrimeSupport inter{true, {}};
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i))
          inter = intersect(inter, w.supports[i]);
      holds = holds && (inter.all || !inter.primes.empty());
    }
  }
  w.obstruction_holds = holds;
  w.certified_lower = holds ? k : 0;
  return w;
}

Regime parse_regime(const std::string& name) {
  if (name == "infinite-maximal-ideals" || name == "infinite")
    return Regime::InfiniteMaximal;
  if (name == "semilocal")
    return Regime::Semilocal;
  if (name == "number-ring")
    return Regime::NumberRing;
  if (name == "residue")
    return Regime::Residue;
  if (name == "psl")
    return Regime::PSL;
  fail(ErrorCode::BadRegime, "unknown regime '" + name + "'");
}

std::string regime_name(Regime r) {
  switch (r) {
  case Regime::InfiniteMaximal:
    return "infinite-maximal-ideals";
  case Regime::Semilocal:
    return "semilocal";
  case Regime::NumberRing:
    return "number-ring";
  case Regime::Residue:
    return "residue";
  case Regime::PSL:
    return "psl";
  }
  return "?";
}

BoundValue delta_upper(int n, int k, Regime regime, const BoundParams& params) {
  if (n < 3)
    fail(ErrorCode::InvalidArgument, "bounds need n >= 3, got " + std::to_string(n));
  if (k < 0)
    fail(ErrorCode::InvalidArgument, "k must be nonnegative");
  const Int N = n;
  const Int K = k;
  auto need_k = [&] {
    if (k < 1)
      fail(ErrorCode::BadRegime, regime_name(regime) + " bound needs k >= 1");
  };
  auto semilocal = [&](const Int& d) -> Int {
    Int m = d;
    if (k >= 1 && K * (N + 1) < m)
      m = K * (N + 1);
    return 12 * (N - 1) * m;
  };
  switch (regime) {
  case Regime::InfiniteMaximal:
    need_k();
    if (params.c_n <= 0)
      fail(ErrorCode::BadRegime, "infinite-maximal-ideals regime needs C_n >= 1");
    return {regime, (4 * N + 4) * params.c_n * K, "(4n+4) C_n k", "bounded elementary generation, infinitely many maximal ideals"};
  case Regime::Semilocal:
    if (params.d <= 0)
      fail(ErrorCode::BadRegime, "semilocal regime needs d >= 1");
    return {regime, semilocal(params.d), k >= 1 ? "12(n-1) min{d, k(n+1)}" : "12(n-1) d", "semilocal ring with d maximal ideals"};
  case Regime::NumberRing:
    need_k();
    return {regime, (4 * N + 51) * (4 * N + 4) * K, "(4n+51)(4n+4) k", "ring of integers of a number field"};
  case Regime::Residue: {
    if (params.modulus < 2)
      fail(ErrorCode::BadRegime, "residue regime needs l >= 2");
    Int d = static_cast<long>(distinct_prime_factors(params.modulus).size());
    return {regime, semilocal(d), k >= 1 ? "12(n-1) min{d, k(n+1)}, d = number of primes dividing l" : "12 d (n-1), d = number of primes dividing l",
            "SL(n, Z/l)"};
  }
  case Regime::PSL:
    return {regime, 12 * (N - 1), "12(n-1)", "PSL(n, F_q)"};
  }
  fail(ErrorCode::BadRegime, "unknown regime");
}

ClassSizeBound class_size_lower(const Int& order, const Int& delta) {
  if (order <= 3)
    fail(ErrorCode::DegenerateGroup, "class size bound needs |G| > 3, got " + str(order));
  if (delta < 2)
    fail(ErrorCode::InvalidArgument, "class size bound needs Delta >= 2, got " + str(delta));
  if (!delta.fits_ulong_p())
    fail(ErrorCode::InvalidArgument, "Delta too large");
  ClassSizeBound b;
  b.order = order;
  b.delta = delta;
  double lg = std::log2(order.get_d());
  b.generic_threshold = lg / delta.get_d() - 2;
  b.symmetric_threshold = lg / delta.get_d() - 1;
  b.min_size_generic = least_above_root(order, delta, 4);
  b.min_size_symmetric = least_above_root(order, delta, 2);
  return b;
}

bool class_size_bound_holds(const Int& order, const Int& delta, const Int& class_size, bool symmetric) {
  if (!delta.fits_ulong_p() || delta < 1)
    fail(ErrorCode::InvalidArgument, "bad Delta");
  return pow_int((symmetric ? 2 : 4) * class_size, delta.get_ui()) > order;
}

Int sl_order(int n, const Int& q) {
  if (n < 1 || q < 2)
    fail(ErrorCode::InvalidArgument, "sl_order needs n >= 1 and q >= 2");
  Int out = pow_int(q, static_cast<unsigned long>(n) * (n - 1) / 2);
  for (int k = 2; k <= n; ++k)
    out *= pow_int(q, k) - 1;
  return out;
}

Int psl_order(int n, const Int& q) {
  Int g = gcd(Int(n), Int(q - 1));
  return sl_order(n, q) / g;
}

PslChainReport check_psl_chain(int n, const Int& q) {
  if (n < 3)
    fail(ErrorCode::InvalidArgument, "PSL chain needs n >= 3");
  if (!is_prime(q))
    fail(ErrorCode::NotPrime, str(q) + " is not prime");
  PslChainReport rep;
  rep.n = n;
  rep.q = q;
  rep.order = psl_order(n, q);
  auto add = [&](std::string name, const std::string& lhs, const std::string& rhs, bool holds) {
    rep.steps.push_back({std::move(name), lhs, rhs, holds});
  };

  // Class-size bound at Delta = 12(n-1), exactly: least admissible class size.
  Int delta = 12 * (n - 1);
  ClassSizeBound b = class_size_lower(rep.order, delta);
  add("least class size allowed by Delta <= 12(n-1)", str(b.min_size_generic), ">= 1", b.min_size_generic >= 1);

  // log(x-1) >= log x - 2c/x for x = q^k: ln(x/(x-1)) <= 1/(x-1) <= 2/x.
  bool log_step = true;
  for (int k = 2; k <= n; ++k) {
    Int x = pow_int(q, k);
    log_step = log_step && x <= 2 * (x - 1);
  }
  add("x <= 2(x-1) for x = q^k, k = 2..n", "q^k", "2(q^k - 1)", log_step);

  // sum_{k>=2}^{n} 2c/q^k <= 2 using c = 1/ln 2 < 3/2.
  mpq_class tail = 0;
  for (int k = 2; k <= n; ++k)
    tail += mpq_class(3, 1) / mpq_class(pow_int(q, k));
  tail.canonicalize();
  add("3 * sum_{k=2}^{n} q^-k <= 2", str(tail), "2", tail <= 2);

  Int g = gcd(Int(n), Int(q - 1));
  add("gcd(n, q-1) <= q", str(g), str(q), g <= q);

  // Endpoint: log|G| >= (n^2 - 2) log q - 2, i.e. 4|G| >= q^(n^2-2).
  Int lhs = 4 * rep.order;
  Int rhs = pow_int(q, static_cast<unsigned long>(n * n - 2));
  add("4 |PSL(n,q)| >= q^(n^2-2)", str(lhs), str(rhs), lhs >= rhs);

  rep.holds = std::all_of(rep.steps.begin(), rep.steps.end(), [](const ChainStep& s) { return s.holds; });
  return rep;
}

}  // namespace boundgen
