#pragma once

#include "hyperasym/assembler/local_data.hpp"

namespace hyperasym {

// n-th coefficient: [e^i] Gamma(1 - {alpha+e}) / Gamma(-alpha - e - n), e -> 0+.
std::vector<Rational> y_series(const Rational& alpha, unsigned i, std::size_t N);

// sum_{m<=k} y_{t_j,m} * g_{j,k-m} (coefficientwise).
std::vector<HElement> eta_series(const LocalBlock& block, std::size_t k, std::size_t N);

// sum_rho e^{rho x} sum_j sum_k varpi_{j,k} x^{-t_j-1} sum_i (...) log(1/x)^i / i!
AsymptoticExpansion assemble_expansion(const LocalDataSet& data, std::size_t N, Branch branch = Branch::Upper);

}  // namespace hyperasym
