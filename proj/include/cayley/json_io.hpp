#pragma once

#include <string>

#include <json.hpp>

#include "cayley/cyclotomic.hpp"
#include "cayley/group.hpp"
#include "cayley/spectrum.hpp"
#include "cayley/splitting_field.hpp"

namespace cayley {

using Json = nlohmann::json;

// Coefficients up to 53-bit magnitude serialize as JSON numbers; anything
// larger uses an exact decimal string.
Json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);

Json to_json(const CycInt& v);
CycInt cycint_from_json(const Json& j);

Json to_json(const AbelianGroup& G);

Json element_to_json(const GroupElement& x);
Json element_set_to_json(const ElementSet& s);

Json to_json(const ConnectionSet& cs);
ConnectionSet connection_set_from_json(const Json& j);

Json to_json(const Spectrum& spec);

Json to_json(const SplittingFieldReport& rep);
SplittingFieldReport splitting_field_report_from_json(const Json& j);

}  // namespace cayley
