#include "hyperasym/hring/eval.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace hyperasym {

BigComplex atom_eval(const HAtom& a, int P)
{
    Bits wb = digits_to_bits(P + kGuardDigits);
    switch (a.kind) {
    case AtomKind::EulerGamma:
        return n_euler_gamma(P);
    case AtomKind::Pi:
        return BigComplex(const_pi(wb));
    case AtomKind::InvPi:
        return BigComplex(Real(1, wb) / const_pi(wb));
    case AtomKind::Gamma:
        return n_gamma(a.r, P);
    case AtomKind::Psi:
        return n_psi_k(0, a.r, P);
    case AtomKind::HurwitzZeta:
        return n_hurwitz(a.s, a.r, P);
    case AtomKind::LogPrime:
        return BigComplex(log(Real(a.r, wb)));
    case AtomKind::Polylog:
        return n_polylog(a.s, embed(a.alpha, wb + 64), P);
    }
    throw std::logic_error("unknown atom kind");
}

namespace {

struct Pass {
    BigComplex value;
    Real abs_terms;
};

Pass eval_pass(const HElement& x, int w)
{
    Bits wb = digits_to_bits(w + kGuardDigits);
    std::map<HAtom, BigComplex> cache;
    BigComplex sum(wb);
    Real abs_terms(0, 64);
    for (const auto& [m, c] : x.terms()) {
        BigComplex t = embed(c, wb);
        for (const auto& [a, e] : m) {
            auto it = cache.find(a);
            if (it == cache.end())
                it = cache.emplace(a, atom_eval(a, w).with_prec(wb)).first;
            t *= pow(it->second, static_cast<long>(e));
        }
        abs_terms += abs(t).with_prec(64);
        sum += t;
    }
    return {sum, abs_terms};
}

}  // namespace

BigComplex h_eval(const HElement& x, int P)
{
    if (x.is_zero())
        return BigComplex(digits_to_bits(P + kGuardDigits));
    int w = P + 10;
    int cap = 4 * P + 100;
    for (;;) {
        Pass r = eval_pass(x, w);
        Real s = abs(r.value).with_prec(64);
        // each term carries relative error below 10^{4-w}
        double lost = s.is_zero() ? 1e9 : (r.abs_terms.exponent() - s.exponent()) * 0.30103;
        if (lost + 4 - w <= -P - 2 || w >= cap)
            return r.value;
        w = std::min(cap, static_cast<int>(std::ceil(P + 8 + lost)) + 10);
    }
}

}  // namespace hyperasym
