#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace boundgen {

struct IdentityCheck {
  std::string name;
  std::size_t draws = 0;
  std::size_t failures = 0;
  std::string first_failure;  // empty when all draws agree
};

struct IdentityReport {
  std::uint64_t seed = 0;
  std::vector<IdentityCheck> checks;
  bool all_hold() const;
};

// Randomized exact checks, `count` draws per family, reproducible from `seed`:
// double commutator closed form (Z, Z/12), Steinberg relations (n = 3..5),
// semilocal factorization replay and length, Hessenberg reduction, word
// calculus (inverse, transpose), decision certificates.
IdentityReport check_identities(std::uint64_t seed, std::size_t count);

// Single families, shared with the acceptance runner.
IdentityCheck check_double_commutators(const std::string& ring_text, std::uint64_t seed, std::size_t count,
                                       long entry_bound);
IdentityCheck check_steinberg(std::uint64_t seed, std::size_t count);
IdentityCheck check_semilocal(const std::string& ring_text, int n, std::uint64_t seed, std::size_t count);

}  // namespace boundgen
