#include "boundgen/words.hpp"

#include <algorithm>

#include "boundgen/error.hpp"

namespace boundgen {

GenSet::GenSet(const std::vector<MatrixSL>& elems) : ring_(), n_(0) {
  if (elems.empty())
    fail(ErrorCode::InvalidArgument, "generating set needs at least one matrix to infer ring and n");
  ring_ = elems.front().ring();
  n_ = elems.front().n();
  for (const auto& m : elems)
    add(m);
}

const MatrixSL& GenSet::operator[](std::size_t i) const {
  if (i >= elems_.size())
    fail(ErrorCode::IndexOutOfRange, "generator index " + std::to_string(i) + " but |S| = " +
                                         std::to_string(elems_.size()));
  return elems_[i];
}

void GenSet::check(const MatrixSL& m) const {
  if (m.ring() != ring_)
    fail(ErrorCode::RingMismatch, "generator over " + m.ring().to_string() + ", set over " + ring_.to_string());
  if (m.n() != n_)
    fail(ErrorCode::DimMismatch, "generator of size " + std::to_string(m.n()) + ", set has n=" + std::to_string(n_));
}

std::size_t GenSet::add(const MatrixSL& m, const std::string& label) {
  check(m);
  if (find(m))
    fail(ErrorCode::InvalidArgument, "duplicate generator " + m.to_string());
  elems_.push_back(m);
  labels_.push_back(label);
  return elems_.size() - 1;
}

std::size_t GenSet::intern(const MatrixSL& m) {
  if (auto i = find(m))
    return *i;
  return add(m);
}

std::optional<std::size_t> GenSet::find(const MatrixSL& m) const {
  auto it = std::find(elems_.begin(), elems_.end(), m);
  if (it == elems_.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - elems_.begin());
}

GenSet GenSet::transposed() const {
  GenSet t(ring_, n_);
  t.elems_.reserve(elems_.size());
  for (const auto& m : elems_)
    t.elems_.push_back(m.transpose());
  t.labels_ = labels_;
  return t;
}

GenSet GenSet::reduced(const Ring& target) const {
  GenSet t(target, n_);
  for (const auto& m : elems_)
    t.elems_.push_back(m.reduce(target));
  t.labels_ = labels_;
  return t;
}

MatrixSL letter_value(const Letter& l, const GenSet& s) {
  const MatrixSL& g = s[l.gen];
  if (l.conjugator.ring() != s.ring())
    fail(ErrorCode::RingMismatch, "conjugator over " + l.conjugator.ring().to_string());
  if (l.conjugator.n() != s.n())
    fail(ErrorCode::DimMismatch, "conjugator of size " + std::to_string(l.conjugator.n()));
  if (l.exponent != 1 && l.exponent != -1)
    fail(ErrorCode::InvalidArgument, "letter exponent must be +1 or -1");
  MatrixSL base = l.exponent == 1 ? g : g.inverse();
  if (l.conjugator.is_identity())
    return base;
  return conj(base, l.conjugator);
}

MatrixSL eval(const ConjWord& w, const GenSet& s) {
  MatrixSL acc = MatrixSL::identity(s.ring(), s.n());
  for (const auto& l : w.letters)
    acc = acc * letter_value(l, s);
  return acc;
}

std::vector<MatrixSL> partial_products(const ConjWord& w, const GenSet& s) {
  std::vector<MatrixSL> out;
  out.reserve(w.length());
  MatrixSL acc = MatrixSL::identity(s.ring(), s.n());
  for (const auto& l : w.letters) {
    acc = acc * letter_value(l, s);
    out.push_back(acc);
  }
  return out;
}

ConjWord invert(const ConjWord& w) {
  ConjWord r;
  r.letters.reserve(w.length());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.push(it->gen, -it->exponent, it->conjugator);
  return r;
}

ConjWord concat(const ConjWord& a, const ConjWord& b) {
  ConjWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

ConjWord conjugate_word(const ConjWord& w, const MatrixSL& h) {
  ConjWord r;
  r.letters.reserve(w.length());
  for (const auto& l : w.letters)
    r.push(l.gen, l.exponent, h * l.conjugator);
  return r;
}

ConjWord absorb_conjugator(const ConjWord& w, const MatrixSL& g) {
  ConjWord r;
  r.letters.reserve(w.length());
  for (const auto& l : w.letters)
    r.push(l.gen, l.exponent, l.conjugator * g);
  return r;
}

ConjWord transpose_word(const ConjWord& w) {
  ConjWord r;
  r.letters.reserve(w.length());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.push(it->gen, it->exponent, it->conjugator.inverse_transpose());
  return r;
}

ConjWord power(const ConjWord& w, long count) {
  ConjWord unit = count < 0 ? invert(w) : w;
  ConjWord r;
  for (long i = 0; i < std::abs(count); ++i)
    r.letters.insert(r.letters.end(), unit.letters.begin(), unit.letters.end());
  return r;
}

ConjWord remap(const ConjWord& w, const std::vector<std::size_t>& index_map) {
  ConjWord r = w;
  for (auto& l : r.letters) {
    if (l.gen >= index_map.size())
      fail(ErrorCode::IndexOutOfRange, "no image for generator " + std::to_string(l.gen));
    l.gen = index_map[l.gen];
  }
  return r;
}

ConjWord substitute(const ConjWord& w, const GenSet& t, const std::map<std::size_t, ConjWord>& dict,
                    const GenSet& s) {
  for (const auto& [idx, word] : dict) {
    if (idx >= t.size())
      fail(ErrorCode::IndexOutOfRange, "dictionary key " + std::to_string(idx) + " outside T");
    if (eval(word, s) != t[idx])
      fail(ErrorCode::BadDictEntry, "entry for generator " + std::to_string(idx) + " does not evaluate to it");
  }
  ConjWord r;
  for (const auto& l : w.letters) {
    auto it = dict.find(l.gen);
    if (it == dict.end())
      fail(ErrorCode::MissingSubstitution, "no word for generator " + std::to_string(l.gen));
    ConjWord piece = l.exponent == 1 ? it->second : invert(it->second);
    piece = conjugate_word(piece, l.conjugator);
    r.letters.insert(r.letters.end(), piece.letters.begin(), piece.letters.end());
  }
  return r;
}

Certificate make_certificate(const GenSet& gens, const ConjWord& word, bool with_partials) {
  std::vector<MatrixSL> parts = partial_products(word, gens);
  MatrixSL target = parts.empty() ? MatrixSL::identity(gens.ring(), gens.n()) : parts.back();
  Certificate c{gens, word, target, word.length(), std::nullopt};
  if (with_partials)
    c.partials = std::move(parts);
  return c;
}

VerifyResult verify(const Certificate& cert) {
  VerifyResult r;
  const ConjWord& w = cert.word;
  if (cert.claimed_length != w.length()) {
    r.ok = false;
    r.message = "claimed length " + std::to_string(cert.claimed_length) + " but word has " +
                std::to_string(w.length()) + " letters";
    return r;
  }
  if (cert.partials && cert.partials->size() != w.length()) {
    r.ok = false;
    r.message = "partials list has " + std::to_string(cert.partials->size()) + " entries for " +
                std::to_string(w.length()) + " letters";
    return r;
  }
  MatrixSL acc = MatrixSL::identity(cert.gens.ring(), cert.gens.n());
  for (std::size_t i = 0; i < w.length(); ++i) {
    acc = acc * letter_value(w.letters[i], cert.gens);
    if (cert.partials && (*cert.partials)[i] != acc) {
      r.ok = false;
      r.first_mismatch = i;
      r.message = "partial product " + std::to_string(i) + " differs from the claim";
      return r;
    }
  }
  if (acc != cert.target) {
    r.ok = false;
    r.first_mismatch = w.length();
    r.message = "word evaluates to " + acc.to_string() + ", claimed " + cert.target.to_string();
  }
  return r;
}

}  // namespace boundgen
