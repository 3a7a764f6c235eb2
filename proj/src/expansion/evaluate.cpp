#include "hyperasym/expansion/evaluate.hpp"

#include "hyperasym/hring/eval.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperasym {

BigComplex expansion_log(const AsymptoticExpansion& e, const BigComplex& x)
{
    Bits wb = x.prec();
    if (e.domain == "continuation")
        return log(x);
    BigComplex z = embed(e.lambda, wb) * x;
    Real pi = const_pi(wb);
    Real theta = arg(z);
    Real half_pi = ldexp(pi, -1);
    if (e.branch == Branch::Upper && theta <= -half_pi)
        theta += ldexp(pi, 1);
    if (e.branch == Branch::Lower && theta > half_pi)
        theta -= ldexp(pi, 1);
    Real theta_l(0, wb);
    if (!e.lambda.is_one()) {
        auto ang = e.lambda.root_of_unity_angle();
        if (!ang)
            throw std::invalid_argument("lambda must be a root of unity");
        Rational a = *ang > Rational(1, 2) ? *ang - Rational(1) : *ang;
        theta_l = ldexp(pi, 1) * Real(a, wb);
    }
    return {log(abs(z)), theta - theta_l};
}

BigComplex evaluate_expansion(const AsymptoticExpansion& e, const BigComplex& x, int P, std::size_t max_depth)
{
    Bits wb = digits_to_bits(P + kGuardDigits);
    BigComplex xw = x.with_prec(wb);
    BigComplex lx = expansion_log(e, xw);
    BigComplex L = -lx;
    BigComplex total(wb);
    for (const auto& [rho, list] : e.parts) {
        BigComplex part(wb);
        for (const auto& s : list) {
            std::size_t N = std::min(s.depth(), max_depth);
            for (std::size_t i = 0; i < s.log_count(); ++i) {
                BigComplex Li = pow(L, static_cast<long>(i));
                for (std::size_t n = 0; n < N; ++n) {
                    const HElement& c = s.coeff(i, n);
                    if (c.is_zero())
                        continue;
                    BigComplex mu(Real(-(Rational(static_cast<long>(n)) + s.alpha()), wb), Real(0, wb));
                    part += h_eval(c, P).with_prec(wb) * Li * exp(mu * lx);
                }
            }
        }
        if (rho != 0)
            part *= exp(embed(e.lambda * CycloNumber(rho), wb) * xw);
        total += part;
    }
    return h_eval(e.prefactor, P).with_prec(wb) * total;
}

}  // namespace hyperasym
