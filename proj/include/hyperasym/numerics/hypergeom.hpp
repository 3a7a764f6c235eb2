#pragma once

#include "hyperasym/exact/params.hpp"
#include "hyperasym/numerics/special.hpp"

#include <vector>

namespace hyperasym {

// Partial sum of pFq(a; b; z) with a certified bound on truncation plus
// rounding error; retried at higher working precision until the bound is
// below 10^{-P-10} relative. Raises NumericError when it cannot certify and
// std::domain_error outside the disc of convergence.
BigComplex n_pFq(const std::vector<Rational>& a, const std::vector<Rational>& b, const BigComplex& z, int P);
// Evaluates at lambda * z.
BigComplex n_pFq(const HyperParams& params, const BigComplex& z, int P);

}  // namespace hyperasym
