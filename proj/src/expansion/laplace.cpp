#include "hyperasym/expansion/laplace.hpp"

#include <stdexcept>

namespace hyperasym {

std::vector<Rational> laplace_coeffs(const std::vector<Rational>& c)
{
    std::vector<Rational> out(c.size() + 1);
    for (std::size_t n = 0; n < c.size(); ++n)
        out[n + 1] = c[n];
    return out;
}

std::vector<Rational> hypergeometric_e_coeffs(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                              std::size_t depth)
{
    // c_n = prod (a)_n / prod (b)_n
    std::vector<Rational> out(depth);
    Rational t(1);
    for (std::size_t n = 0; n < depth; ++n) {
        out[n] = t;
        Rational ln(static_cast<long>(n));
        for (const auto& x : a)
            t *= x + ln;
        for (const auto& x : b)
            t /= x + ln;
    }
    return out;
}

std::vector<Rational> inverse_hypergeometric_coeffs(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                                    std::size_t depth)
{
    std::vector<Rational> out(depth + 1);
    Rational t(1);
    for (std::size_t n = 0; n < depth; ++n) {
        out[n + 1] = t;
        Rational ln(static_cast<long>(n));
        for (const auto& x : a)
            t *= x + ln;
        for (const auto& x : b)
            t /= x + ln;
        t /= ln + Rational(1);
    }
    return out;
}

LaplaceIdentityReport check_laplace_identity(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                             std::size_t depth)
{
    if (b.size() < a.size() || a.empty())
        throw std::invalid_argument("Laplace identity needs q >= p >= 1");
    LaplaceIdentityReport rep;
    rep.r = static_cast<unsigned>(b.size() - a.size() + 1);
    rep.depth = depth;
    unsigned r = rep.r;
    // G: coefficient of z^{-rn-1} is prod (a)_n (rn)! / (n! prod (b)_n)
    std::vector<Rational> c = hypergeometric_e_coeffs(a, b, depth);
    std::vector<Rational> G(depth);
    for (std::size_t n = 0; n < depth; ++n)
        G[n] = c[n] * Rational(factorial(r * n)) / Rational(factorial(n));
    std::vector<Rational> a2 = a;
    for (unsigned k = 1; k <= r; ++k)
        a2.push_back(Rational(static_cast<long>(k), static_cast<long>(r)));
    std::vector<Rational> g = inverse_hypergeometric_coeffs(a2, b, depth);
    // z^{r-1} g(z^r / r^r): coefficient of z^{-rn-1} is g_{n+1} r^{r(n+1)}
    Rational rr = pow(Rational(static_cast<long>(r)), static_cast<long>(r));
    std::optional<Rational> ratio;
    bool constant = true;
    rep.corrected_holds = true;
    for (std::size_t n = 0; n < depth; ++n) {
        Rational rhs = g[n + 1] * pow(rr, static_cast<long>(n + 1));
        if (!(rhs / rr == G[n]) && rep.corrected_holds) {
            rep.corrected_holds = false;
            rep.first_failure = n;
        }
        if (G[n].is_zero())
            continue;
        Rational q = rhs / G[n];
        if (!ratio)
            ratio = q;
        else if (!(*ratio == q))
            constant = false;
    }
    if (constant)
        rep.uncorrected_ratio = ratio;
    return rep;
}

}  // namespace hyperasym
