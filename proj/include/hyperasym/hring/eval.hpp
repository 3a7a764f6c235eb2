#pragma once

#include "hyperasym/hring/element.hpp"
#include "hyperasym/numerics/special.hpp"

namespace hyperasym {

BigComplex atom_eval(const HAtom& a, int P);

// Numeric value of x with relative error <= 10^{4-P}. Working precision is
// raised to absorb cancellation between terms, up to about 4P + 100 digits;
// past that cap the result is returned with absolute error relative to the
// largest term.
BigComplex h_eval(const HElement& x, int P);

}  // namespace hyperasym
