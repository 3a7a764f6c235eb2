#pragma once

#include "hyperasym/asymp/gamma_quotient.hpp"
#include "hyperasym/expansion/log_series.hpp"

#include <vector>

namespace hyperasym {

// Taylor coefficients of Gamma(c + e) through e^{order-1}.
std::vector<HElement> gamma_series_at(const Rational& c, std::size_t order);

// Residue of R(s) z^{s} at s = -c_m - k, as coefficients of
// z^{-c_m-k} log(1/z)^i, i = 0, 1, ... (empty when regular).
std::vector<HElement> residue_at(const GammaQuotient& R, std::size_t m, unsigned long k);

// One LogSeries per parameter group, alpha = c_m, n = k < N.
std::vector<LogSeries> compute_Lp(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t N);

// Closed form for pairwise distinct a mod Z:
// (-1)^k Gamma(a_j+k) prod_{i!=j} Gamma(a_i-a_j-k) / (k! prod Gamma(b_i-a_j-k))
HElement simple_pole_residue(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t j,
                             unsigned long k);

}  // namespace hyperasym
