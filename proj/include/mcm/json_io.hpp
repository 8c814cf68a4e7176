#pragma once

#include <string>

#include <json.hpp>

#include "mcm/ffield.hpp"
#include "mcm/lincode.hpp"
#include "mcm/mctuple.hpp"
#include "mcm/numeric.hpp"

namespace mcm {

using Json = nlohmann::json;

// All emitted JSON is canonical: object keys sorted (nlohmann default map
// order), integers only, big values as decimal strings.  Indices in files
// are 1-based.

Json field_to_json(const Field& F);
Field field_from_json(const Json& j);

Json shape_to_json(const Shape& s);
Shape shape_from_json(const Json& j, bool checked = true);

Json tuple_to_json(const MatrixTuple& C);
MatrixTuple tuple_from_json(const Json& j, bool checked_shape = false);

Json code_to_json(const LinearCode& C);
LinearCode code_from_json(const Json& j);

std::string big_to_string(const Big& v);

std::string canonical_dump(const Json& j, int indent = -1);

LinearCode load_code_file(const std::string& path);
void save_code_file(const std::string& path, const LinearCode& C);

} // namespace mcm
