#include "hyperasym/asymp/residue.hpp"

#include "hyperasym/asymp/laurent.hpp"
#include "hyperasym/hring/factory.hpp"

#include <stdexcept>

namespace hyperasym {

std::vector<HElement> gamma_series_at(const Rational& c, std::size_t order)
{
    return h_gamma_series(c, order);
}

std::vector<HElement> residue_at(const GammaQuotient& R, std::size_t m, unsigned long k)
{
    long D = R.pole_order(m, k);
    if (D <= 0)
        return {};
    const ParamGroup& grp = R.groups.at(m);
    Rational s0 = -grp.representative - Rational(static_cast<long>(k));
    LaurentProduct lp(static_cast<std::size_t>(D));
    for (std::size_t g = 0; g < R.groups.size(); ++g) {
        const ParamGroup& G = R.groups[g];
        for (unsigned long o : G.offsets) {
            lp.mul_gamma(G.representative + s0, 1);
            // (c + s)_o = prod_{i<o} (c + i + s)
            for (unsigned long i = 0; i < o; ++i)
                lp.mul_linear(G.representative + Rational(static_cast<long>(i)) + s0, 1);
        }
    }
    for (const auto& b : R.den)
        lp.div_gamma(b + s0, 1);
    if (R.neg_gamma)
        lp.mul_gamma(-s0, -1);
    if (lp.valuation() != -D)
        throw std::logic_error("residue_at: inconsistent pole order");
    // z^s = z^{s0} exp(-e log(1/z)); residue = [e^{D-1}] of C exp(L) exp(-e log(1/z))
    std::vector<HElement> ex = lp.exp_series();
    std::vector<HElement> out(static_cast<std::size_t>(D));
    Integer fact(1);
    for (long i = 0; i < D; ++i) {
        if (i > 0)
            fact *= i;
        Rational c = Rational(i % 2 == 0 ? 1 : -1) / Rational(fact);
        out[static_cast<std::size_t>(i)] = lp.constant() * ex[static_cast<std::size_t>(D - 1 - i)] * CycloNumber(c);
    }
    return out;
}

std::vector<LogSeries> compute_Lp(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t N)
{
    GammaQuotient R = GammaQuotient::from_params(a, b);
    std::vector<LogSeries> out;
    for (std::size_t m = 0; m < R.groups.size(); ++m) {
        LogSeries s(R.groups[m].representative, N);
        for (unsigned long k = 0; k < N; ++k) {
            std::vector<HElement> r = residue_at(R, m, k);
            for (std::size_t i = 0; i < r.size(); ++i)
                s.add(i, k, r[i]);
        }
        s.trim();
        out.push_back(std::move(s));
    }
    return out;
}

HElement simple_pole_residue(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t j,
                             unsigned long k)
{
    Rational kk(static_cast<long>(k));
    Rational aj = a.at(j);
    HElement out = h_gamma(aj + kk) * CycloNumber(Rational(k % 2 == 0 ? 1 : -1) / Rational(factorial(k)));
    for (std::size_t i = 0; i < a.size(); ++i)
        if (i != j)
            out = out * h_gamma(a[i] - aj - kk);
    for (const auto& x : b)
        out = out * h_reciprocal_gamma(x - aj - kk);
    return out;
}

}  // namespace hyperasym
