#pragma once

#include "hyperasym/exact/params.hpp"

#include <vector>

namespace hyperasym {

// R(s) = P(s) Gamma(-s)^{[neg_gamma]} prod Gamma(c_m + s)^{d_m} / prod Gamma(b + s)
// with P(s) = prod_m prod_{members} (c_m + s)_{offset}, i.e. the grouped form
// of prod Gamma(a_j + s) / prod Gamma(b_j + s) Gamma(-s).
struct GammaQuotient {
    std::vector<ParamGroup> groups;
    std::vector<Rational> den;
    bool neg_gamma = true;

    static GammaQuotient from_params(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                     bool neg_gamma = true);
    // Order of the pole at s = -c_m - k (0 when regular).
    long pole_order(std::size_t m, unsigned long k) const;
};

}  // namespace hyperasym
