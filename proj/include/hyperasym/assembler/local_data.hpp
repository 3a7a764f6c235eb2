#pragma once

#include "hyperasym/expansion/expansion.hpp"
#include "hyperasym/hring/json.hpp"

#include <map>
#include <vector>

namespace hyperasym {

// Local solutions (z - rho)^t sum_{k'<=k} g_{k-k'}(z - rho) log(z - rho)^{k'}/k'!
// for k = 0..K, with connection constants varpi_k.
struct LocalBlock {
    Rational t;
    std::vector<std::vector<HElement>> series;  // g_k, power series coefficients
    std::vector<HElement> constants;           // varpi_k
};

struct LocalData {
    int rho = 0;
    std::vector<LocalBlock> blocks;
};

using LocalDataSet = std::map<int, LocalData>;

Json to_json(const LocalData& d);
LocalData local_data_from_json(const Json& j);
Json to_json(const LocalDataSet& s);
LocalDataSet local_data_set_from_json(const Json& j);

// Local data of g(z) = (1/z) 2F1[a, 1; b; 1/z], the Laplace companion of
// 1F1[a; b; x], at rho = 0 and rho = 1 from the Gauss connection formulas.
// Requires a, b - a not integers. Series carry N coefficients.
LocalDataSet kummer_local_data(const Rational& a, const Rational& b, Branch branch, std::size_t N);

// Largest relative error of the connection decomposition of g at one sample
// point near each singularity, using independent convergent evaluations.
double validate_kummer_local_data(const Rational& a, const Rational& b, Branch branch, const LocalDataSet& d, int P);

}  // namespace hyperasym
