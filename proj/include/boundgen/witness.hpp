#pragma once

#include <string>
#include <vector>

#include "boundgen/words.hpp"

namespace boundgen {

// S = {E_{1,n}(r_i)} with r_i the product of all chosen primes except p_i.
struct LowerBoundWitness {
  int k = 0;
  int n = 0;
  std::vector<Int> primes;  // ascending
  std::vector<Int> r;
  std::vector<Int> f;  // sum f_i r_i = 1
  GenSet gens;
  ConjWord crt_word;  // evaluates to E_{1,n}(1), length sum |f_i|
  // membership[i][j]: generator i is congruent to I modulo p_j.
  std::vector<std::vector<bool>> membership;
  std::vector<PrimeSupport> supports;
  bool obstruction_holds = false;  // no word of k-1 letters reaches E_{1,n}(1)
  int certified_lower = 0;         // ||G||_S >= certified_lower
  bool assume_el_generates = true;
};

LowerBoundWitness build_lower_witness(int n, std::vector<Int> primes);

enum class Regime { InfiniteMaximal, Semilocal, NumberRing, Residue, PSL };

struct BoundParams {
  Int c_n;       // InfiniteMaximal: bounded generation constant C_n
  Int d;         // Semilocal: number of maximal ideals
  Int modulus;   // Residue: l
};

struct BoundValue {
  Regime regime;
  Int value;
  std::string formula;
  std::string source;
};

Regime parse_regime(const std::string& name);
std::string regime_name(Regime r);
// k = 0 asks for the uniform bound where one exists (Residue, PSL).
BoundValue delta_upper(int n, int k, Regime regime, const BoundParams& params = {});

// log2|S| > log2|G|/Delta - 2 (generic) and log2|G|/Delta - 1 (symmetric class),
// decided exactly as (4|S|)^Delta > |G| and (2|S|)^Delta > |G|.
struct ClassSizeBound {
  Int order;
  Int delta;
  double generic_threshold = 0;    // log2 bound, for display only
  double symmetric_threshold = 0;
  Int min_size_generic;    // least s satisfying the generic bound
  Int min_size_symmetric;
};

ClassSizeBound class_size_lower(const Int& order, const Int& delta);
bool class_size_bound_holds(const Int& order, const Int& delta, const Int& class_size, bool symmetric);

Int sl_order(int n, const Int& q);   // |SL(n, F_q)|, q a prime power
Int psl_order(int n, const Int& q);  // |PSL(n, F_q)|

struct ChainStep {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool holds = false;
};

// Exact-rational check of the class-size chain for PSL(n, F_q), q prime.
struct PslChainReport {
  int n = 0;
  Int q;
  Int order;
  std::vector<ChainStep> steps;
  bool holds = false;
};

PslChainReport check_psl_chain(int n, const Int& q);

}  // namespace boundgen
