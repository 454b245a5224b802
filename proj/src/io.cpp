#include "boundgen/io.hpp"

#include <fstream>
#include <sstream>

#include "boundgen/error.hpp"

namespace boundgen::io {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& msg) {
  fail(ErrorCode::SchemaError, path + ": " + msg);
}

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object())
    schema(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end())
    schema(path, std::string("missing member \"") + key + "\"");
  return *it;
}

int small_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer())
    schema(path, "expected an integer");
  return j.get<int>();
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::SchemaError, std::string("$: invalid JSON (") + e.what() + ")");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    fail(ErrorCode::InvalidArgument, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::SchemaError, path + ": invalid JSON (" + e.what() + ")");
  }
}

Json ring_to_json(const Ring& r) {
  Json j;
  switch (r.kind()) {
  case RingKind::Integers:
    j["kind"] = "Z";
    break;
  case RingKind::Residue:
    j["kind"] = "Zmod";
    j["l"] = int_to_json(r.modulus());
    break;
  case RingKind::PrimeField:
    j["kind"] = "Fp";
    j["p"] = int_to_json(r.modulus());
    break;
  }
  return j;
}

Ring ring_from_json(const Json& j, const std::string& path) {
  if (j.is_string())
    return Ring::parse(j.get<std::string>());
  const Json& kind = member(j, "kind", path);
  if (!kind.is_string())
    schema(path + ".kind", "expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "Z")
    return Ring::integers();
  if (k == "Zmod")
    return Ring::residue(int_from_json(member(j, "l", path), path + ".l"));
  if (k == "Fp")
    return Ring::prime_field(int_from_json(member(j, "p", path), path + ".p"));
  schema(path + ".kind", "unknown ring kind \"" + k + "\" (expected Z, Zmod or Fp)");
}

Json int_to_json(const Int& x) {
  if (x.fits_slong_p() && x >= -(1L << 52) && x <= (1L << 52))
    return x.get_si();
  return x.get_str();
}

Int int_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer())
    return j.is_number_unsigned() ? Int(std::to_string(j.get<unsigned long long>())) : Int(j.get<long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    Int v;
    bool digits = !s.empty() && s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) == std::string::npos &&
                  s != "-";
    if (!digits || v.set_str(s, 10) != 0)
      schema(path, "expected a decimal integer, got \"" + s + "\"");
    return v;
  }
  schema(path, "expected a decimal string or an integer");
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 1; i <= m.n(); ++i) {
    Json row = Json::array();
    for (int k = 1; k <= m.n(); ++k)
      row.push_back(m.at(i, k).get_str());
    rows.push_back(row);
  }
  Json j;
  j["ring"] = ring_to_json(m.ring());
  j["n"] = m.n();
  j["rows"] = rows;
  return j;
}

Json matrix_to_json(const MatrixSL& m) { return matrix_to_json(m.matrix()); }

Matrix matrix_from_json(const Json& j, const std::string& path, const Ring* ring) {
  const Json* rows_json = &j;
  std::optional<Ring> r;
  if (ring)
    r = *ring;
  int n = -1;
  if (j.is_object()) {
    if (j.contains("ring")) {
      Ring own = ring_from_json(j["ring"], path + ".ring");
      if (r && !(own == *r))
        schema(path + ".ring", "ring " + own.to_string() + " does not match " + r->to_string());
      r = own;
    }
    if (j.contains("n"))
      n = small_int(j["n"], path + ".n");
    rows_json = &member(j, "rows", path);
  }
  const std::string rpath = j.is_object() ? path + ".rows" : path;
  if (!r)
    schema(path, "missing member \"ring\"");
  if (!rows_json->is_array() || rows_json->empty())
    schema(rpath, "expected a nonempty array of rows");
  const int size = static_cast<int>(rows_json->size());
  if (n != -1 && n != size)
    schema(rpath, "has " + std::to_string(size) + " rows but n = " + std::to_string(n));
  if (size < 2 || size > kMaxDim)
    schema(rpath, "dimension must be between 2 and " + std::to_string(kMaxDim));
  std::vector<std::vector<Int>> rows;
  for (int i = 0; i < size; ++i) {
    const Json& row = (*rows_json)[i];
    const std::string p = rpath + "[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != size)
      schema(p, "expected a row of " + std::to_string(size) + " entries");
    std::vector<Int> vals;
    for (int k = 0; k < size; ++k)
      vals.push_back(int_from_json(row[k], p + "[" + std::to_string(k) + "]"));
    rows.push_back(vals);
  }
  return Matrix::from_rows(*r, rows);
}

MatrixSL matrix_sl_from_json(const Json& j, const std::string& path, const Ring* ring) {
  Matrix m = matrix_from_json(j, path, ring);
  try {
    return MatrixSL(m);
  } catch (const Error& e) {
    fail(e.code(), path + ": " + e.detail());
  }
}

Json genset_to_json(const GenSet& s) {
  Json j;
  j["ring"] = ring_to_json(s.ring());
  j["n"] = s.n();
  Json gens = Json::array();
  for (const MatrixSL& g : s.elements())
    gens.push_back(matrix_to_json(g)["rows"]);
  j["gens"] = gens;
  return j;
}

GenSet genset_from_json(const Json& j, const std::string& path) {
  std::optional<Ring> ring;
  const Json* list = &j;
  std::string lpath = path;
  int n = -1;
  if (j.is_object()) {
    if (j.contains("ring"))
      ring = ring_from_json(j["ring"], path + ".ring");
    if (j.contains("n"))
      n = small_int(j["n"], path + ".n");
    list = &member(j, "gens", path);
    lpath = path + ".gens";
  }
  if (!list->is_array())
    schema(lpath, "expected an array of matrices");
  std::vector<MatrixSL> elems;
  for (std::size_t i = 0; i < list->size(); ++i) {
    const std::string p = lpath + "[" + std::to_string(i) + "]";
    elems.push_back(matrix_sl_from_json((*list)[i], p, ring ? &*ring : nullptr));
    if (!ring)
      ring = elems.back().ring();
    if (n == -1)
      n = elems.back().n();
    if (elems.back().n() != n)
      schema(p, "dimension " + std::to_string(elems.back().n()) + " differs from n = " + std::to_string(n));
    for (std::size_t k = 0; k + 1 < elems.size(); ++k)
      if (elems[k] == elems.back())
        schema(p, "duplicate of generator " + std::to_string(k));
  }
  if (elems.empty()) {
    if (!ring || n == -1)
      schema(lpath, "an empty generating set needs \"ring\" and \"n\"");
    return GenSet(*ring, n);
  }
  return GenSet(elems);
}

Json word_to_json(const ConjWord& w) {
  Json letters = Json::array();
  for (const Letter& l : w.letters) {
    Json e;
    e["g"] = l.gen;
    e["e"] = l.exponent;
    e["c"] = matrix_to_json(l.conjugator);
    letters.push_back(e);
  }
  return letters;
}

ConjWord word_from_json(const Json& j, const Ring& ring, int n, const std::string& path) {
  if (!j.is_array())
    schema(path, "expected an array of letters");
  ConjWord w;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    const Json& l = j[i];
    const Json& g = member(l, "g", p);
    if (!g.is_number_integer() || g.get<long>() < 0)
      schema(p + ".g", "expected a nonnegative generator index");
    int e = small_int(member(l, "e", p), p + ".e");
    if (e != 1 && e != -1)
      schema(p + ".e", "exponent must be 1 or -1");
    MatrixSL c = l.contains("c") ? matrix_sl_from_json(l["c"], p + ".c", &ring) : MatrixSL::identity(ring, n);
    if (c.n() != n)
      schema(p + ".c", "conjugator has the wrong dimension");
    w.push(g.get<std::size_t>(), e, c);
  }
  return w;
}

Json certificate_to_json(const Certificate& c) {
  Json j;
  Json gens = Json::array();
  for (const MatrixSL& g : c.gens.elements())
    gens.push_back(matrix_to_json(g));
  j["gens"] = gens;
  j["letters"] = word_to_json(c.word);
  Json claims;
  claims["target"] = matrix_to_json(c.target);
  claims["length"] = c.claimed_length;
  j["claims"] = claims;
  if (c.partials) {
    Json partials = Json::array();
    for (const MatrixSL& p : *c.partials)
      partials.push_back(matrix_to_json(p));
    j["partials"] = partials;
  }
  return j;
}

Certificate certificate_from_json(const Json& j, const std::string& path) {
  const Json& claims = member(j, "claims", path);
  MatrixSL target = matrix_sl_from_json(member(claims, "target", path + ".claims"), path + ".claims.target");
  const Ring ring = target.ring();
  const int n = target.n();
  const Json& gens_json = member(j, "gens", path);
  if (!gens_json.is_array())
    schema(path + ".gens", "expected an array of matrices");
  GenSet gens(ring, n);
  for (std::size_t i = 0; i < gens_json.size(); ++i) {
    const std::string p = path + ".gens[" + std::to_string(i) + "]";
    MatrixSL g = matrix_sl_from_json(gens_json[i], p, &ring);
    if (g.n() != n)
      schema(p, "dimension differs from the target");
    if (gens.find(g))
      schema(p, "duplicate generator");
    gens.add(g);
  }
  ConjWord word = word_from_json(member(j, "letters", path), ring, n, path + ".letters");
  for (std::size_t i = 0; i < word.length(); ++i)
    if (word.letters[i].gen >= gens.size())
      schema(path + ".letters[" + std::to_string(i) + "].g",
             "generator index " + std::to_string(word.letters[i].gen) + " out of range");
  const Json& len = member(claims, "length", path + ".claims");
  if (!len.is_number_integer() || len.get<long>() < 0)
    schema(path + ".claims.length", "expected a nonnegative integer");
  Certificate c{gens, word, target, len.get<std::size_t>(), std::nullopt};
  if (j.contains("partials")) {
    const Json& ps = j["partials"];
    if (!ps.is_array())
      schema(path + ".partials", "expected an array of matrices");
    std::vector<MatrixSL> partials;
    for (std::size_t i = 0; i < ps.size(); ++i)
      partials.push_back(matrix_sl_from_json(ps[i], path + ".partials[" + std::to_string(i) + "]", &ring));
    c.partials = partials;
  }
  return c;
}

Json prime_support_to_json(const PrimeSupport& p) {
  Json j;
  j["all"] = p.all;
  Json primes = Json::array();
  for (const Int& q : p.primes)
    primes.push_back(q.get_str());
  j["primes"] = primes;
  return j;
}

}  // namespace boundgen::io
