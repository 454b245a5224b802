#include "boundgen/rings.hpp"

#include <algorithm>

#include "boundgen/error.hpp"

namespace boundgen {

namespace {

constexpr unsigned long kTrialLimit = 1000000;

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1)
      r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic for all 64-bit inputs with these bases.
bool miller_rabin(u64 n) {
  if (n < 2)
    return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0)
      return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Brent's variant; n odd composite.
u64 pollard_rho(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, d = 1, q = 1, ys = 2;
    u64 r = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    const u64 m = 128;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i)
        y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        d = gcd_u64(q, n);
        k += m;
      } while (k < r && d == 1);
      r <<= 1;
    } while (d == 1);
    if (d == n) {
      do {
        ys = f(ys);
        d = gcd_u64(x > ys ? x - ys : ys - x, n);
      } while (d == 1);
    }
    if (d != n)
      return d;
  }
}

void factor_u64(u64 n, std::vector<u64>& out) {
  if (n == 1)
    return;
  if (miller_rabin(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_rho(n);
  factor_u64(d, out);
  factor_u64(n / d, out);
}

bool fits_u64(const Int& x) { return x >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 64; }

u64 to_u64(const Int& x) {
  u64 r = 0;
  mpz_export(&r, nullptr, -1, sizeof(r), 0, 0, x.get_mpz_t());
  return r;
}

Int from_u64(u64 v) {
  Int r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return r;
}

Int plain_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

bool is_prime(const Int& p) {
  if (p < 2)
    return false;
  if (fits_u64(p))
    return miller_rabin(to_u64(p));
  for (unsigned long d = 2; d <= kTrialLimit; ++d) {
    if (mpz_divisible_ui_p(p.get_mpz_t(), d))
      return false;
  }
  fail(ErrorCode::FactorizationTooLarge, "primality of " + p.get_str() + " exceeds the factoring budget");
}

std::vector<Int> distinct_prime_factors(const Int& x) {
  if (x == 0)
    fail(ErrorCode::InvalidArgument, "cannot factor 0");
  Int n = abs(x);
  std::vector<Int> primes;
  for (unsigned long d = 2; d <= kTrialLimit && n > 1; ++d) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      primes.emplace_back(d);
      do {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
      } while (mpz_divisible_ui_p(n.get_mpz_t(), d));
    }
    if (Int(d) * d > n)
      break;
  }
  if (n > 1) {
    Int bound = Int(kTrialLimit) * kTrialLimit;
    if (n < bound) {
      primes.push_back(n);
    } else if (!fits_u64(n)) {
      fail(ErrorCode::FactorizationTooLarge, "cofactor " + n.get_str() + " exceeds 2^64 after trial division");
    } else {
      std::vector<u64> fs;
      factor_u64(to_u64(n), fs);
      for (u64 f : fs)
        primes.push_back(from_u64(f));
    }
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

Ring Ring::integers() {
  static const auto z = std::make_shared<const Data>(Data{RingKind::Integers, Int(0), {}});
  return Ring(z);
}

Ring Ring::residue(const Int& l) {
  if (l < 2)
    fail(ErrorCode::InvalidArgument, "residue modulus must be >= 2, got " + l.get_str());
  return Ring(std::make_shared<const Data>(Data{RingKind::Residue, l, distinct_prime_factors(l)}));
}

Ring Ring::prime_field(const Int& p) {
  if (!is_prime(p))
    fail(ErrorCode::NotPrime, "field characteristic " + p.get_str() + " is not prime");
  return Ring(std::make_shared<const Data>(Data{RingKind::PrimeField, p, {p}}));
}

Ring Ring::parse(const std::string& text) {
  auto number = [&](const std::string& s) {
    Int v;
    if (s.empty() || v.set_str(s, 10) != 0)
      fail(ErrorCode::InvalidArgument, "bad ring modulus in '" + text + "'");
    return v;
  };
  if (text == "Z")
    return integers();
  if (text.rfind("Zmod:", 0) == 0)
    return residue(number(text.substr(5)));
  if (text.rfind("Fp:", 0) == 0)
    return prime_field(number(text.substr(3)));
  fail(ErrorCode::InvalidArgument, "unknown ring '" + text + "' (expected Z, Zmod:<l> or Fp:<p>)");
}

Int Ring::normalize(const Int& x) const {
  if (is_integers())
    return x;
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), data_->modulus.get_mpz_t());
  return r;
}

std::string Ring::to_string() const {
  switch (kind()) {
    case RingKind::Integers: return "Z";
    case RingKind::Residue: return "Zmod:" + modulus().get_str();
    case RingKind::PrimeField: return "Fp:" + modulus().get_str();
  }
  return "?";
}

bool Ring::operator==(const Ring& o) const {
  if (data_ == o.data_)
    return true;
  return kind() == o.kind() && modulus() == o.modulus();
}

Int canonical_associate(const Int& x, const Ring& ring) {
  if (ring.is_integers())
    return abs(x);
  Int g = plain_gcd(ring.normalize(x), ring.modulus());
  return g == ring.modulus() ? Int(0) : g;
}

Int gcd_many(const std::vector<Int>& xs, const Ring& ring) {
  Int g = 0;
  for (const Int& x : xs)
    g = plain_gcd(g, ring.normalize(x));
  return canonical_associate(g, ring);
}

XGcd xgcd(const Int& a, const Int& b, const Ring& ring) {
  Int la = ring.normalize(a), lb = ring.normalize(b);
  XGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
  if (ring.is_integers())
    return r;
  // (g1) = (gcd) in Z/l; rescale so g is the canonical generator.
  Int u = unit_to_canonical(r.g, ring);
  r.g = canonical_associate(r.g, ring);
  r.s = ring.mul(r.s, u);
  r.t = ring.mul(r.t, u);
  return r;
}

bool is_unit(const Int& a, const Ring& ring) {
  if (ring.is_integers())
    return a == 1 || a == -1;
  return plain_gcd(ring.normalize(a), ring.modulus()) == 1;
}

Int inverse(const Int& a, const Ring& ring) {
  if (!is_unit(a, ring))
    fail(ErrorCode::NotCoprime, a.get_str() + " is not a unit in " + ring.to_string());
  if (ring.is_integers())
    return a;
  Int r;
  Int la = ring.normalize(a);
  mpz_invert(r.get_mpz_t(), la.get_mpz_t(), ring.modulus().get_mpz_t());
  return r;
}

Int unit_to_canonical(const Int& a, const Ring& ring) {
  if (ring.is_integers())
    return a < 0 ? Int(-1) : Int(1);
  const Int& l = ring.modulus();
  Int la = ring.normalize(a);
  if (la == 0)
    return 1;
  Int g, u0, v;
  mpz_gcdext(g.get_mpz_t(), u0.get_mpz_t(), v.get_mpz_t(), la.get_mpz_t(), l.get_mpz_t());
  if (g == 1)
    return ring.normalize(u0);
  // u0 is a unit mod l/g; move it along l/g until it is a unit mod l.
  Int cof = l / g;
  Int x = unit_shift(u0, cof, ring);
  Int u = ring.normalize(u0 + cof * x);
  ensure(is_unit(u, ring) && ring.mul(u, la) == g, "unit_to_canonical");
  return u;
}

Int unit_shift(const Int& a, const Int& b, const Ring& ring) {
  if (ring.is_integers())
    fail(ErrorCode::UnsupportedRing, "unit_shift needs finitely many maximal ideals");
  if (gcd_many({a, b}, ring) != 1)
    fail(ErrorCode::NotCoprime, "gcd(" + a.get_str() + ", " + b.get_str() + ") is not a unit");
  Int la = ring.normalize(a);
  Int x = 1;
  for (const Int& p : ring.maximal_ideals()) {
    if (!mpz_divisible_p(la.get_mpz_t(), p.get_mpz_t()))
      x *= p;
  }
  x = ring.normalize(x);
  ensure(is_unit(ring.add(a, ring.mul(b, x)), ring), "unit_shift result is not a unit");
  return x;
}

bool divides(const Int& d, const Int& x, const Ring& ring) {
  Int cd = canonical_associate(d, ring);
  Int lx = ring.normalize(x);
  if (cd == 0)
    return lx == 0;
  if (ring.is_integers())
    return mpz_divisible_p(lx.get_mpz_t(), cd.get_mpz_t()) != 0;
  // In Z/l, (d) = (gcd(d,l)) and x in (g) iff g | lift(x).
  return mpz_divisible_p(lx.get_mpz_t(), cd.get_mpz_t()) != 0;
}

bool PrimeSupport::contains(const Int& p) const {
  return all || std::binary_search(primes.begin(), primes.end(), p);
}

PrimeSupport prime_support_of(const Int& x, const Ring& ring) {
  PrimeSupport s;
  if (ring.is_integers()) {
    if (x == 0) {
      s.all = true;
      return s;
    }
    s.primes = distinct_prime_factors(x);
    return s;
  }
  Int lx = ring.normalize(x);
  for (const Int& p : ring.maximal_ideals()) {
    if (mpz_divisible_p(lx.get_mpz_t(), p.get_mpz_t()))
      s.primes.push_back(p);
  }
  return s;
}

PrimeSupport intersect(const PrimeSupport& a, const PrimeSupport& b) {
  if (a.all)
    return b;
  if (b.all)
    return a;
  PrimeSupport r;
  std::set_intersection(a.primes.begin(), a.primes.end(), b.primes.begin(), b.primes.end(),
                        std::back_inserter(r.primes));
  return r;
}

}  // namespace boundgen
