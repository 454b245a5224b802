#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace boundgen {

using Int = mpz_class;

enum class RingKind { Integers, Residue, PrimeField };

// Coefficient ring: Z, Z/l (l >= 2) or F_p. Cheap to copy; the prime list is
// shared between copies.
class Ring {
public:
  static Ring integers();
  static Ring residue(const Int& l);
  static Ring prime_field(const Int& p);
  // "Z", "Zmod:12", "Fp:7"
  static Ring parse(const std::string& text);

  Ring() : Ring(integers()) {}

  RingKind kind() const { return data_->kind; }
  bool is_integers() const { return data_->kind == RingKind::Integers; }
  bool is_finite() const { return !is_integers(); }
  // 0 for the integers.
  const Int& modulus() const { return data_->modulus; }
  // Distinct prime divisors of the modulus, ascending; empty for Z.
  const std::vector<Int>& maximal_ideals() const { return data_->primes; }

  Int normalize(const Int& x) const;
  Int add(const Int& a, const Int& b) const { return normalize(a + b); }
  Int sub(const Int& a, const Int& b) const { return normalize(a - b); }
  Int mul(const Int& a, const Int& b) const { return normalize(a * b); }
  Int neg(const Int& a) const { return normalize(-a); }

  std::string to_string() const;
  bool operator==(const Ring& o) const;
  bool operator!=(const Ring& o) const { return !(*this == o); }

private:
  struct Data {
    RingKind kind;
    Int modulus;
    std::vector<Int> primes;
  };
  explicit Ring(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

struct XGcd {
  Int g, s, t;  // s*a + t*b = g
};

// Canonical generator of the ideal (x): |x| over Z, gcd(lift, l) over Z/l
// (with l itself mapped to 0).
Int canonical_associate(const Int& x, const Ring& ring);
Int gcd_many(const std::vector<Int>& xs, const Ring& ring);
XGcd xgcd(const Int& a, const Int& b, const Ring& ring);
bool is_unit(const Int& a, const Ring& ring);
Int inverse(const Int& a, const Ring& ring);
// Unit u with u*a equal to canonical_associate(a).
Int unit_to_canonical(const Int& a, const Ring& ring);
// x with a + b*x a unit (finite rings only).
Int unit_shift(const Int& a, const Int& b, const Ring& ring);
bool divides(const Int& d, const Int& x, const Ring& ring);

struct PrimeSupport {
  bool all = false;
  std::vector<Int> primes;  // ascending, meaningful when !all
  bool contains(const Int& p) const;
  bool operator==(const PrimeSupport&) const = default;
};

PrimeSupport prime_support_of(const Int& x, const Ring& ring);
PrimeSupport intersect(const PrimeSupport& a, const PrimeSupport& b);

// Distinct prime factors of |x| (x != 0), ascending.
std::vector<Int> distinct_prime_factors(const Int& x);
bool is_prime(const Int& p);

}  // namespace boundgen
