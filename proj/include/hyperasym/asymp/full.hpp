#pragma once

#include "hyperasym/asymp/ck.hpp"
#include "hyperasym/expansion/expansion.hpp"

namespace hyperasym {

// Principal angle a in (-1/2, 1/2] with lambda = e^{2 pi i a}; throws
// std::invalid_argument when lambda is not a root of unity.
Rational lambda_angle(const CycloNumber& lambda);

// L_p written in the sector variable: L_p(e^{-i pi} z) for the upper
// branch, L_p(e^{i pi} z) for the lower one, z = lambda x.
std::vector<LogSeries> substitute_branch(const std::vector<LogSeries>& Lp, Branch branch, const CycloNumber& lambda);

// e^{lambda x} sum_k C_k (lambda x)^{nu-k} as a series in x.
LogSeries exponential_part(const HyperParams& params, const std::vector<CycloNumber>& C, std::size_t N);

// pFp(lambda x) ~ prod Gamma(b)/prod Gamma(a) (L-part + K-part) in the sector
// of the branch; terminating series are returned exactly.
AsymptoticExpansion compute_full_expansion(const HyperParams& params, Branch branch, std::size_t N,
                                           CkMethod method = CkMethod::Recursion);

// The exact polynomial when some a_j is a non-positive integer.
AsymptoticExpansion polynomial_expansion(const HyperParams& params);

}  // namespace hyperasym
