#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "boundgen/words.hpp"

namespace boundgen {

// Element-count budget: BOUNDGEN_BUDGET if set, else 2^24.
std::size_t default_budget();

using Elem = std::uint32_t;

// All elements of a finite matrix group over Z/l (l <= 255), each stored as
// its n^2 residues packed base l into a 64-bit code. Immutable once built.
class FiniteGroupTable {
public:
  // SL(n, ring), or PSL(n, ring) when `psl` (elements are the least code in
  // their scalar coset).
  static FiniteGroupTable enumerate(const Ring& ring, int n, bool psl = false,
                                    std::size_t budget = default_budget());
  // Subgroup of SL(n, ring) generated by `gens`.
  static FiniteGroupTable generated_by(const Ring& ring, int n, const std::vector<MatrixSL>& gens,
                                       std::size_t budget = default_budget());

  const Ring& ring() const { return ring_; }
  int n() const { return n_; }
  bool psl() const { return psl_; }
  std::size_t size() const { return codes_.size(); }
  Elem identity() const { return 0; }

  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem conj(Elem g, Elem h) const { return mul(mul(h, g), inverse_[h]); }  // h g h^-1

  std::optional<Elem> find(const Matrix& m) const;
  Elem index_of(const MatrixSL& m) const;  // InvalidArgument if absent
  MatrixSL element(Elem e) const;
  std::uint64_t code(Elem e) const { return codes_[e]; }

  // Generators used for enumeration and for conjugacy-class orbits.
  const std::vector<Elem>& generators() const { return generators_; }
  // Scalar elements (just the identity for PSL tables).
  const std::vector<Elem>& center() const { return center_; }
  // Closed-form order when the table is a full SL / PSL.
  std::optional<Int> expected_order() const { return expected_; }

private:
  FiniteGroupTable(const Ring& ring, int n, bool psl);

  std::uint64_t encode(const std::uint8_t* digits) const;
  std::uint64_t canonical(std::uint8_t* digits) const;
  std::optional<Elem> lookup(std::uint64_t code) const;
  Elem insert(std::uint64_t code, const std::uint8_t* digits);
  void build(const std::vector<MatrixSL>& gens, std::size_t budget);

  Ring ring_;
  int n_;
  bool psl_;
  unsigned l_;
  std::vector<unsigned> scalars_;  // lambda with lambda^n = 1
  std::vector<std::uint64_t> codes_;
  std::vector<std::uint8_t> digits_;  // n^2 per element
  std::vector<std::uint8_t> residue_;  // v mod l for every possible dot product
  std::vector<Elem> inverse_;
  std::vector<Elem> generators_;
  std::vector<Elem> center_;
  std::optional<Int> expected_;
  // Code -> index: direct-address when l^(n^2) is small, else open addressing.
  std::vector<std::int32_t> direct_;
  std::vector<std::uint64_t> hash_keys_;
  std::vector<Elem> hash_vals_;
  std::size_t hash_count_ = 0;
};

// |SL(n, Z/l)| in closed form.
Int sl_order_mod(int n, const Int& l);

// Orbit of each element under conjugation by the table's generators.
struct ConjugacyClasses {
  std::vector<std::vector<Elem>> classes;  // sorted, ordered by least element
  std::vector<std::uint32_t> class_of;
};

ConjugacyClasses conjugacy_classes(const FiniteGroupTable& g);

// One letter of the BFS alphabet: value = conjugator * s^exponent * conjugator^-1.
struct AlphabetEntry {
  Elem value = 0;
  std::size_t gen = 0;
  int exponent = 1;
  Elem conjugator = 0;
};

// conj_G(S^{+-1}), sorted by value, without the identity.
std::vector<AlphabetEntry> class_closure(const FiniteGroupTable& g, const std::vector<Elem>& s);

struct BallReport {
  std::vector<Elem> S;
  std::vector<AlphabetEntry> alphabet;
  std::vector<int> norm;  // -1 outside the normal closure
  std::vector<Elem> parent;
  std::vector<std::uint32_t> via;   // alphabet index of the last letter
  std::vector<std::size_t> growth;  // |B_S(d)| for d = 0..max finite norm
  bool normally_generates = false;
  int diameter = -1;  // -1 when S does not normally generate
};

// Level-synchronous BFS; right multiplication by the alphabet. Results do
// not depend on `threads`.
BallReport ball_bfs(const FiniteGroupTable& g, const std::vector<Elem>& s, int threads = 1);
// Word of length norm(x) over the generating set {element(s_i)}.
ConjWord ball_word(const FiniteGroupTable& g, const BallReport& r, Elem x);
// Elements of B_S(d).
std::vector<Elem> ball_members(const BallReport& r, int d);

// conj(s) union conj(s^-1) for every nontrivial s, ordered by least element.
std::vector<std::vector<Elem>> symmetric_classes(const FiniteGroupTable& g);

struct DeltaReport {
  int k = 0;
  bool attained = false;  // false: no normally generating set of size <= k
  int value = 0;
  std::vector<Elem> witness;  // one representative per class of the argmax set
  bool simple_shortcut = false;
  std::size_t collections_checked = 0;
};

// Exact Delta_k(G) by sweeping collections of <= k symmetric classes. For a
// simple group every nontrivial class normally generates and Delta = Delta_1.
DeltaReport delta_exhaustive(const FiniteGroupTable& g, int k, int threads = 1);
// Delta(G): sup over sets of any size.
DeltaReport delta_all(const FiniteGroupTable& g, int threads = 1);
// Least k such that some k elements normally generate G.
int normal_generation_number(const FiniteGroupTable& g);
bool is_simple(const FiniteGroupTable& g);

// Elementwise image of G in H (reduction of the ring, and/or passage to PSL).
std::vector<Elem> quotient_map(const FiniteGroupTable& g, const FiniteGroupTable& h);

// Normal closure of a set of elements.
std::vector<Elem> normal_closure(const FiniteGroupTable& g, const std::vector<Elem>& s);

// Proper normal subgroups N_1..N_k with G -> prod G/N_i onto give Delta(G) >= k.
// Returns k after checking normality, properness and surjectivity, else 0.
int splitting_lower_bound(const FiniteGroupTable& g, const std::vector<std::vector<Elem>>& normals);

}  // namespace boundgen
