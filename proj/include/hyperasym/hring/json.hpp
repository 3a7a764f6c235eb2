#pragma once

#include "hyperasym/hring/element.hpp"

#include <json.hpp>

namespace hyperasym {

using Json = nlohmann::ordered_json;

Json atom_to_json(const HAtom& a);
HAtom atom_from_json(const Json& j);
// {"terms":[{"monomial":[atom, ...],"coeff":"<cyclo literal>"}]}; atoms
// repeat according to their exponent.
Json to_json(const HElement& x);
HElement helement_from_json(const Json& j);

}  // namespace hyperasym
