#include "hyperasym/asymp/gamma_quotient.hpp"

namespace hyperasym {

GammaQuotient GammaQuotient::from_params(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                         bool neg_gamma)
{
    GammaQuotient g;
    g.groups = group_parameters(a);
    g.den = b;
    g.neg_gamma = neg_gamma;
    return g;
}

long GammaQuotient::pole_order(std::size_t m, unsigned long k) const
{
    const ParamGroup& grp = groups.at(m);
    Rational s0 = -grp.representative - Rational(static_cast<long>(k));
    long order = 0;
    for (unsigned long o : grp.offsets)
        if (o <= k)
            ++order;
    for (const auto& x : den)
        if ((x + s0).is_nonpositive_integer())
            --order;
    if (neg_gamma && (-s0).is_nonpositive_integer())
        ++order;
    return order;
}

}  // namespace hyperasym
