#pragma once

#include <string>

#include "json.hpp"

#include "boundgen/words.hpp"

namespace boundgen::io {

// Insertion-ordered so that reports keep a stable, readable key order.
using Json = nlohmann::ordered_json;

// Parse failures and schema violations raise SchemaError citing a JSON path
// such as "$.gens[1].rows[0][2]".
Json read_json_file(const std::string& path);
Json parse_json(const std::string& text);

Json ring_to_json(const Ring& r);
Ring ring_from_json(const Json& j, const std::string& path = "$");

Json int_to_json(const Int& x);
Int int_from_json(const Json& j, const std::string& path);

// {"ring": ..., "n": 3, "rows": [["1","0","5"], ...]}
Json matrix_to_json(const Matrix& m);
Json matrix_to_json(const MatrixSL& m);
// `ring` overrides a missing "ring" member; when both are present they must agree.
Matrix matrix_from_json(const Json& j, const std::string& path = "$", const Ring* ring = nullptr);
MatrixSL matrix_sl_from_json(const Json& j, const std::string& path = "$", const Ring* ring = nullptr);

// {"ring": ..., "n": 3, "gens": [matrix or rows, ...]}, or a bare array of matrices.
Json genset_to_json(const GenSet& s);
GenSet genset_from_json(const Json& j, const std::string& path = "$");

Json word_to_json(const ConjWord& w);
ConjWord word_from_json(const Json& j, const Ring& ring, int n, const std::string& path);

// {"gens": [...], "letters": [{"g":0,"e":1,"c":matrix}, ...],
//  "claims": {"target": matrix, "length": 4}, "partials": [...]}
Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j, const std::string& path = "$");

Json prime_support_to_json(const PrimeSupport& p);

}  // namespace boundgen::io
