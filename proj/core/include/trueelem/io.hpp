#pragma once

// JSON documents: matrices, words, certificates, residues and reports.
// Integers travel as decimal strings; indices are 1-based.

#include <json.hpp>

#include "trueelem/congruence.hpp"
#include "trueelem/freegroup.hpp"

namespace trueelem {

using Json = nlohmann::json;

/// Accepts a decimal string or a JSON integer.
Integer integer_from_json(const Json& j);
std::vector<std::vector<Integer>> integer_rows_from_json(const Json& j);
Json rows_to_json(const std::vector<std::vector<Integer>>& rows);

/// {"ring":"Z"|"Z/m","n":int,"entries":[[string,...],...]}
Json to_json(const SqMatrix& m);
SqMatrix matrix_from_json(const Json& j);
/// Bare entries array, ring supplied separately.
SqMatrix matrix_from_json(const Json& j, const RingSpec& spec);

Json to_json(const GroupExpr& w);
GroupExpr word_from_json(const Json& j);

/// {"claim":{"ring","n","ideal","discipline","target"},"witness":word}
Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json to_json(const SlResidueMatrix& r);
Json to_json(const OrderReport& r);
Json to_json(const CounterexampleReport& r);

/// Parses text into JSON, mapping syntax errors to ErrorKind::Parse.
Json parse_json(std::string_view text);

}  // namespace trueelem
