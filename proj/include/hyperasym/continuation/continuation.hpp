#pragma once

#include "hyperasym/exact/params.hpp"
#include "hyperasym/expansion/expansion.hpp"
#include "hyperasym/numerics/complex.hpp"

namespace hyperasym {

// Continuation of the (p+1)Fp series to |z| > 1, |arg(-z)| < pi, as
// prod Gamma(b)/prod Gamma(a) * sum of residues of R(s) w^s, w = -z, with
// p+1 numerator gammas. Domain tag "continuation"; series in 1/w.
AsymptoticExpansion compute_Mp(const HyperParams& params, std::size_t N);

// Explicit formula for a_j pairwise distinct mod Z:
// sum_j w^{-a_j} Q_j (p+1)Fp[a_j, 1-b+a_j; 1-a_i+a_j (i != j); 1/z], prefactor 1.
AsymptoticExpansion distinct_case_formula(const HyperParams& params, std::size_t N);

// Value at z (not w) of a continuation expansion, depths n < max_depth.
BigComplex evaluate_continuation(const AsymptoticExpansion& e, const BigComplex& z, int P,
                                 std::size_t max_depth = static_cast<std::size_t>(-1));

}  // namespace hyperasym
