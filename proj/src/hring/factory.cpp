#include "hyperasym/hring/factory.hpp"

#include "hyperasym/exact/series.hpp"

#include <stdexcept>

namespace hyperasym {

HElement h_euler_gamma() { return HElement::atom(HAtom::euler_gamma()); }
HElement h_pi() { return HElement::atom(HAtom::pi()); }
HElement h_inv_pi() { return HElement::atom(HAtom::inv_pi()); }

HElement h_gamma(const Rational& r)
{
    if (r.is_nonpositive_integer())
        throw std::domain_error("Gamma(" + r.str() + ") is a pole");
    Rational f = r.frac();
    if (f.is_zero())
        return HElement(Rational(factorial(r.to_long() - 1)));
    // Gamma(f + n) = (f)_n Gamma(f); Gamma(f - m) = Gamma(f) / (f-m)_m
    Rational scale(1);
    if (r > f) {
        for (Rational x = f; x < r; x += 1)
            scale *= x;
    } else {
        for (Rational x = r; x < f; x += 1)
            scale /= x;
    }
    return HElement::atom(HAtom::gamma(f)) * CycloNumber(scale);
}

HElement h_psi(const Rational& r)
{
    if (r.is_nonpositive_integer())
        throw std::domain_error("Psi(" + r.str() + ") is a pole");
    Rational f = r.frac();
    Rational shift(0);
    HElement base;
    if (f.is_zero()) {
        f = Rational(1);
        base = -h_euler_gamma();
    } else {
        base = HElement::atom(HAtom::psi(f));
    }
    // Psi(x + n) = Psi(x) + sum_{k<n} 1/(x + k)
    if (r > f) {
        for (Rational x = f; x < r; x += 1)
            shift += x.inverse();
    } else {
        for (Rational x = r; x < f; x += 1)
            shift -= x.inverse();
    }
    return base + HElement(shift);
}

HElement h_hurwitz(long s, const Rational& r)
{
    if (s < 2)
        throw std::domain_error("HurwitzZeta needs s >= 2");
    if (r.is_nonpositive_integer())
        throw std::domain_error("HurwitzZeta(s, " + r.str() + ") is undefined");
    Rational f = r.frac();
    if (f.is_zero())
        f = Rational(1);
    // zeta(s, x + 1) = zeta(s, x) - x^{-s}
    Rational shift(0);
    if (r > f) {
        for (Rational x = f; x < r; x += 1)
            shift -= pow(x, -s);
    } else {
        for (Rational x = r; x < f; x += 1)
            shift += pow(x, -s);
    }
    return HElement::atom(HAtom::hurwitz(s, f)) + HElement(shift);
}

namespace {

void add_factor_logs(HElement& out, Integer n, long sign)
{
    for (Integer p = 2; p * p <= n; ++p) {
        long e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0)
            out += HElement::atom(HAtom::log(Rational(p))) * CycloNumber(sign * e);
        if (p > 100000000)
            throw std::domain_error("Log: argument too large to factor");
    }
    if (n > 1)
        out += HElement::atom(HAtom::log(Rational(n))) * CycloNumber(sign);
}

}  // namespace

HElement h_log(const Rational& r)
{
    if (r.sign() <= 0)
        throw std::domain_error("Log needs a positive rational");
    HElement out;
    add_factor_logs(out, r.num(), 1);
    add_factor_logs(out, r.den(), -1);
    return out;
}

HElement h_polylog(long s, const CycloNumber& alpha)
{
    if (s < 1)
        throw std::domain_error("Li_s needs s >= 1");
    if (alpha.is_zero())
        return HElement();
    auto angle = alpha.root_of_unity_angle();
    if (!angle)
        return HElement::atom(HAtom::polylog(s, alpha));
    long p = angle->num().get_si();
    long q = angle->den().get_si();
    if (p == 0) {
        if (s == 1)
            throw std::domain_error("Li_1(1) diverges");
        return h_hurwitz(s, Rational(1));
    }
    HElement out;
    if (s == 1) {
        // Li_1(mu^p) = -(1/q) sum_{n=1}^{q} mu^{np} Psi(n/q)
        for (long n = 1; n <= q; ++n)
            out += h_psi(Rational(n, q)) * CycloNumber::root_of_unity(static_cast<unsigned long>(q), n * p);
        out *= Rational(-1, q);
        return out;
    }
    // Li_s(mu^p) = q^{-s} sum_{n=1}^{q} mu^{np} zeta(s, n/q)
    for (long n = 1; n <= q; ++n)
        out += h_hurwitz(s, Rational(n, q)) * CycloNumber::root_of_unity(static_cast<unsigned long>(q), n * p);
    out *= pow(Rational(q), -s);
    return out;
}

HElement h_invert_gamma(const Rational& r)
{
    if (r.sign() <= 0 || r > Rational(1))
        throw std::domain_error("h_invert_gamma needs 0 < r <= 1");
    if (r.is_one())
        return HElement(1);
    return h_inv_pi() * h_gamma(Rational(1) - r) * CycloNumber::sin_pi(r);
}

HElement h_reciprocal_gamma(const Rational& r)
{
    if (r.is_nonpositive_integer())
        return HElement();
    Rational f = r.frac();
    if (f.is_zero())
        return HElement(Rational(factorial(r.to_long() - 1)).inverse());
    // 1/Gamma(r) = (1/scale) * 1/Gamma(f) with Gamma(r) = scale * Gamma(f)
    Rational scale(1);
    if (r > f) {
        for (Rational x = f; x < r; x += 1)
            scale *= x;
    } else {
        for (Rational x = r; x < f; x += 1)
            scale /= x;
    }
    return h_invert_gamma(f) * CycloNumber(scale.inverse());
}

namespace {

// Psi(c) e + sum_{k>=2} (-1)^k zeta(k, c) e^k / k
std::vector<HElement> log_gamma_tail(const Rational& c, std::size_t order)
{
    std::vector<HElement> l(order);
    if (order > 1)
        l[1] = h_psi(c);
    for (std::size_t k = 2; k < order; ++k) {
        l[k] = h_hurwitz(static_cast<long>(k), c);
        l[k] *= Rational(k % 2 == 0 ? 1 : -1, static_cast<long>(k));
    }
    return l;
}

}  // namespace

std::vector<HElement> h_gamma_series(const Rational& c, std::size_t order)
{
    std::vector<HElement> e = series_exp(log_gamma_tail(c, order), order);
    HElement g = h_gamma(c);
    for (auto& x : e)
        x = g * x;
    return e;
}

std::vector<HElement> h_reciprocal_gamma_series(const Rational& c, std::size_t order)
{
    if (!c.is_nonpositive_integer()) {
        std::vector<HElement> l = log_gamma_tail(c, order);
        for (auto& x : l)
            x = -x;
        std::vector<HElement> e = series_exp(l, order);
        HElement g = h_reciprocal_gamma(c);
        for (auto& x : e)
            x = g * x;
        return e;
    }
    // 1/Gamma(e - N) = e (e - 1) ... (e - N) / Gamma(1 + e)
    long N = -c.to_long();
    std::vector<HElement> poly{HElement(1)};
    for (long j = 0; j <= N; ++j) {
        // multiply by (e - j)
        std::vector<HElement> next(poly.size() + 1);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] += poly[i] * CycloNumber(-j);
        }
        poly = std::move(next);
    }
    std::vector<HElement> rg = h_reciprocal_gamma_series(Rational(1), order);
    return series_mul(poly, rg, order);
}

HElement h_gamma_derivative(unsigned s, const Rational& r)
{
    std::vector<HElement> e = h_gamma_series(r, s + 1);
    return e[s] * CycloNumber(Rational(factorial(s)));
}

namespace {

HElement normalize_atom(const HAtom& a)
{
    switch (a.kind) {
    case AtomKind::EulerGamma:
    case AtomKind::Pi:
    case AtomKind::InvPi:
        return HElement::atom(a);
    case AtomKind::Gamma:
        return h_gamma(a.r);
    case AtomKind::Psi:
        return h_psi(a.r);
    case AtomKind::HurwitzZeta:
        return h_hurwitz(a.s, a.r);
    case AtomKind::LogPrime:
        return h_log(a.r);
    case AtomKind::Polylog:
        return h_polylog(a.s, a.alpha);
    }
    return HElement::atom(a);
}

}  // namespace

HElement h_normalize(const HElement& x)
{
    HElement out;
    for (const auto& [m, c] : x.terms()) {
        HElement t(c);
        for (const auto& [a, e] : m) {
            HElement na = normalize_atom(a);
            t *= pow(na, e);
        }
        out += t;
    }
    return out;
}

}  // namespace hyperasym
