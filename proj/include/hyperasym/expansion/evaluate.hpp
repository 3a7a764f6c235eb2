#pragma once

#include "hyperasym/expansion/expansion.hpp"
#include "hyperasym/numerics/complex.hpp"

namespace hyperasym {

// log x on the branch attached to the expansion (see AsymptoticExpansion).
BigComplex expansion_log(const AsymptoticExpansion& e, const BigComplex& x);

// Numeric value of the truncated expansion at x, using depths n < max_depth.
BigComplex evaluate_expansion(const AsymptoticExpansion& e, const BigComplex& x, int P,
                              std::size_t max_depth = static_cast<std::size_t>(-1));

}  // namespace hyperasym
