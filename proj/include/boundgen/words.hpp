#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "boundgen/matrix.hpp"

namespace boundgen {

// Ordered generating set S, all of one ring and dimension, without duplicates.
class GenSet {
public:
  GenSet(const Ring& ring, int n) : ring_(ring), n_(n) {}
  explicit GenSet(const std::vector<MatrixSL>& elems);

  const Ring& ring() const { return ring_; }
  int n() const { return n_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const MatrixSL& operator[](std::size_t i) const;
  const std::vector<MatrixSL>& elements() const { return elems_; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Fails with InvalidArgument on a duplicate.
  std::size_t add(const MatrixSL& m, const std::string& label = "");
  // Index of m, adding it if absent.
  std::size_t intern(const MatrixSL& m);
  std::optional<std::size_t> find(const MatrixSL& m) const;

  GenSet transposed() const;
  GenSet reduced(const Ring& target) const;

private:
  void check(const MatrixSL& m) const;
  Ring ring_;
  int n_;
  std::vector<MatrixSL> elems_;
  std::vector<std::string> labels_;
};

// conjugator * S[gen]^exponent * conjugator^-1
struct Letter {
  std::size_t gen = 0;
  int exponent = 1;
  MatrixSL conjugator;
};

struct ConjWord {
  std::vector<Letter> letters;
  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  void push(std::size_t gen, int exponent, const MatrixSL& conjugator) {
    letters.push_back(Letter{gen, exponent, conjugator});
  }
};

MatrixSL letter_value(const Letter& l, const GenSet& s);
MatrixSL eval(const ConjWord& w, const GenSet& s);
// Prefix products P_1, ..., P_m (P_m = eval).
std::vector<MatrixSL> partial_products(const ConjWord& w, const GenSet& s);

ConjWord invert(const ConjWord& w);
ConjWord concat(const ConjWord& a, const ConjWord& b);
// eval(result) = h eval(w) h^-1
ConjWord conjugate_word(const ConjWord& w, const MatrixSL& h);
// Word over S for letters that were written over generators G A_g G^-1: the
// conjugator absorbs G on the right.
ConjWord absorb_conjugator(const ConjWord& w, const MatrixSL& g);
// Word over S^T evaluating to eval(w)^T.
ConjWord transpose_word(const ConjWord& w);
ConjWord power(const ConjWord& w, long count);
ConjWord remap(const ConjWord& w, const std::vector<std::size_t>& index_map);

// Replace every letter over T by the corresponding word over S.
ConjWord substitute(const ConjWord& w, const GenSet& t, const std::map<std::size_t, ConjWord>& dict,
                    const GenSet& s);

struct Certificate {
  GenSet gens;
  ConjWord word;
  MatrixSL target;
  std::size_t claimed_length = 0;
  std::optional<std::vector<MatrixSL>> partials;
};

Certificate make_certificate(const GenSet& gens, const ConjWord& word, bool with_partials = true);

struct VerifyResult {
  bool ok = true;
  // Index (0-based) of the first prefix product that disagrees with the
  // claimed partials; equals the word length when only the final product is off.
  std::optional<std::size_t> first_mismatch;
  std::string message;
};

VerifyResult verify(const Certificate& cert);

}  // namespace boundgen
