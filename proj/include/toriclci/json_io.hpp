#pragma once

#include "toriclci/ideal_builder.hpp"
#include "toriclci/nakajima.hpp"
#include "toriclci/numeric.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace toriclci {

// Input documents: {"d": int, "rows": [[m11], [m21, m22], ...]} — the
// ragged free entries only, so structural zeros cannot be mis-specified.
// Throws ParseError on undecodable input; shape problems are left to
// validate_structure.
FreeParamMatrix parse_input_document(const nlohmann::json& j);
FreeParamMatrix parse_input_document(const std::string& text);
FreeParamMatrix read_input_document(std::istream& in);

nlohmann::json input_document_json(const FreeParamMatrix& m);

// Exact integers as JSON: a number while it fits 64 bits, a decimal
// string beyond that.
nlohmann::json int_json(const Int& v);

// {"d":..., "variables":[...], "generators":[{"plus":[...],"minus":[...]}],
//  "minimal":{"eliminated":{"z1":["z2","z5"]}, "generators":[...]}}
nlohmann::json ideal_json(const IdealPresentation& p);

}  // namespace toriclci
