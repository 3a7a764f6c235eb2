#pragma once

#include "hyperasym/expansion/expansion.hpp"
#include "hyperasym/hring/json.hpp"

namespace hyperasym {

inline constexpr const char* kExpansionSchema = "hyperasym.expansion/1";

Json to_json(const AsymptoticExpansion& e);
AsymptoticExpansion expansion_from_json(const Json& j);

}  // namespace hyperasym
