#include "hyperasym/assembler/assembler.hpp"

#include "hyperasym/hring/factory.hpp"

#include <set>
#include <stdexcept>

namespace hyperasym {

namespace {

// Truncated product of linear factors (d - e), or of their reciprocals.
void mul_linear(std::vector<Rational>& f, const Rational& d)
{
    for (std::size_t k = f.size(); k-- > 0;) {
        f[k] *= d;
        if (k > 0)
            f[k] -= f[k - 1];
    }
}

void div_linear(std::vector<Rational>& f, const Rational& d)
{
    // f / (d - e) = f * (1/d) sum (e/d)^k
    Rational inv = Rational(1) / d;
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (k > 0)
            f[k] += f[k - 1];
        f[k] *= inv;
    }
}

}  // namespace

std::vector<Rational> y_series(const Rational& alpha, unsigned i, std::size_t N)
{
    const Rational fl(alpha.floor());
    const Rational c = Rational(1) - (alpha - fl);
    std::vector<Rational> out;
    out.reserve(N);
    for (std::size_t n = 0; n < N; ++n) {
        // Gamma(c - e) / Gamma(c - e - m)
        long m = fl.num().get_si() + 1 + static_cast<long>(n);
        std::vector<Rational> f(i + 1);
        f[0] = Rational(1);
        if (m >= 0)
            for (long l = 1; l <= m; ++l)
                mul_linear(f, c - Rational(l));
        else
            for (long l = 0; l < -m; ++l)
                div_linear(f, c + Rational(l));
        out.push_back(f[i]);
    }
    return out;
}

std::vector<HElement> eta_series(const LocalBlock& block, std::size_t k, std::size_t N)
{
    if (k >= block.series.size())
        throw std::out_of_range("eta_series: k out of range");
    std::vector<HElement> out(N);
    for (std::size_t m = 0; m <= k; ++m) {
        std::vector<Rational> y = y_series(block.t, static_cast<unsigned>(m), N);
        std::vector<HElement> ys(N), g(N);
        const auto& gs = block.series[k - m];
        for (std::size_t n = 0; n < N; ++n) {
            ys[n] = HElement(y[n]);
            if (n < gs.size())
                g[n] = gs[n];
        }
        std::vector<HElement> h = hadamard_star(ys, g);
        for (std::size_t n = 0; n < N; ++n)
            out[n] += h[n];
    }
    return out;
}

AsymptoticExpansion assemble_expansion(const LocalDataSet& data, std::size_t N, Branch branch)
{
    AsymptoticExpansion e;
    e.branch = branch;
    e.depth = N;
    for (const auto& [rho, ld] : data) {
        std::set<Rational> seen;
        for (const auto& blk : ld.blocks)
            if (!seen.insert(blk.t).second)
                throw std::invalid_argument("assemble_expansion: exponent collision");
        for (const auto& blk : ld.blocks) {
            const std::size_t K = blk.constants.size();
            if (K == 0)
                continue;
            const Rational c = Rational(1) - (blk.t - Rational(blk.t.floor()));
            // r_l = (-1)^l / l! * (1/Gamma)^{(l)}(c) = [e^l] 1/Gamma(c - e)
            std::vector<HElement> r = h_reciprocal_gamma_series(c, K);
            for (std::size_t l = 1; l < K; l += 2)
                r[l] = -r[l];
            std::vector<std::vector<HElement>> eta;
            for (std::size_t k = 0; k < K; ++k)
                eta.push_back(eta_series(blk, k, N));
            LogSeries s(blk.t + Rational(1), N);
            const bool integral = blk.t.is_integer() && blk.t >= Rational(0);
            for (std::size_t k = 0; k < K; ++k) {
                if (blk.constants[k].is_zero() || (integral && k == 0))
                    continue;
                for (std::size_t i = 0; i <= k; ++i) {
                    Rational ifact(factorial(i));
                    for (std::size_t l = 0; l + i <= k; ++l) {
                        HElement f = blk.constants[k] * r[l] * CycloNumber(Rational(1) / ifact);
                        if (f.is_zero())
                            continue;
                        const auto& et = eta[k - l - i];
                        for (std::size_t n = 0; n < N; ++n)
                            if (!et[n].is_zero())
                                s.add(i, n, f * et[n]);
                    }
                }
            }
            s.trim();
            e.add(rho, s);
        }
    }
    e.canonicalize();
    return e;
}

}  // namespace hyperasym
