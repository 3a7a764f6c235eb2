#include "hyperasym/asymp/full.hpp"

#include "hyperasym/asymp/residue.hpp"
#include "hyperasym/hring/factory.hpp"

#include <stdexcept>

namespace hyperasym {

Rational lambda_angle(const CycloNumber& lambda)
{
    auto ang = lambda.root_of_unity_angle();
    if (!ang)
        throw std::invalid_argument("lambda must be a root of unity");
    return *ang > Rational(1, 2) ? *ang - Rational(1) : *ang;
}

std::vector<LogSeries> substitute_branch(const std::vector<LogSeries>& Lp, Branch branch, const CycloNumber& lambda)
{
    const Rational a = lambda_angle(lambda);
    const Rational sigma(branch == Branch::Upper ? 1 : -1);
    // log(1/z') = log(1/x) + i pi (sigma - 2a)
    HElement shift = h_pi() * (CycloNumber::imag_unit() * CycloNumber(sigma - Rational(2) * a));
    std::vector<LogSeries> out;
    for (const LogSeries& s : Lp) {
        LogSeries t(s.alpha(), s.depth());
        const std::size_t D = s.log_count();
        std::vector<HElement> spow{HElement(1)};
        for (std::size_t i = 1; i < D; ++i)
            spow.push_back(spow.back() * shift);
        for (std::size_t n = 0; n < s.depth(); ++n) {
            // z'^{-alpha-n} = e^{i pi (sigma - 2a)(alpha+n)} x^{-alpha-n}
            CycloNumber phase = CycloNumber::exp_i_pi((sigma - Rational(2) * a) * (s.alpha() + Rational(static_cast<long>(n))));
            for (std::size_t i = 0; i < D; ++i) {
                const HElement& c = s.coeff(i, n);
                if (c.is_zero())
                    continue;
                HElement cp = c * phase;
                for (std::size_t j = 0; j <= i; ++j)
                    t.add(j, n, cp * spow[i - j] * CycloNumber(Rational(binomial(i, j))));
            }
        }
        t.trim();
        out.push_back(std::move(t));
    }
    return out;
}

LogSeries exponential_part(const HyperParams& params, const std::vector<CycloNumber>& C, std::size_t N)
{
    const Rational v = nu(params);
    const Rational a = lambda_angle(params.lambda);
    LogSeries s(-v, N);
    for (std::size_t k = 0; k < N && k < C.size(); ++k) {
        if (C[k].is_zero())
            continue;
        CycloNumber lp = CycloNumber::exp_i_pi(Rational(2) * a * (v - Rational(static_cast<long>(k))));
        s.set(0, k, HElement(C[k] * lp));
    }
    s.trim();
    return s;
}

AsymptoticExpansion polynomial_expansion(const HyperParams& params)
{
    long deg = -1;
    for (const auto& x : params.a)
        if (x.is_nonpositive_integer()) {
            long d = -x.num().get_si();
            if (deg < 0 || d < deg)
                deg = d;
        }
    if (deg < 0)
        throw std::invalid_argument("not a terminating series");
    const Rational a = lambda_angle(params.lambda);
    AsymptoticExpansion e;
    e.lambda = params.lambda;
    e.depth = static_cast<std::size_t>(deg + 1);
    LogSeries s(Rational(-deg), e.depth);
    Rational t(1);
    for (long n = 0; n <= deg; ++n) {
        if (n > 0) {
            Rational nn(n - 1);
            for (const auto& x : params.a)
                t *= x + nn;
            for (const auto& x : params.b)
                t /= x + nn;
            t /= Rational(n);
        }
        if (t != 0)
            s.set(0, static_cast<std::size_t>(deg - n), HElement(CycloNumber(t) * CycloNumber::exp_i_pi(Rational(2) * a * Rational(n))));
    }
    s.trim();
    e.add(0, s);
    e.canonicalize();
    return e;
}

AsymptoticExpansion compute_full_expansion(const HyperParams& params, Branch branch, std::size_t N, CkMethod method)
{
    params.validate();
    if (params.is_polynomial()) {
        AsymptoticExpansion e = polynomial_expansion(params);
        e.branch = branch;
        return e;
    }
    if (params.p() != params.q())
        throw std::invalid_argument("sector expansions need p = q");
    lambda_angle(params.lambda);
    AsymptoticExpansion e;
    e.branch = branch;
    e.lambda = params.lambda;
    e.depth = N;
    HElement pre(1);
    for (const auto& b : params.b)
        pre *= h_gamma(b);
    for (const auto& a : params.a)
        pre *= h_reciprocal_gamma(a);
    e.prefactor = pre;
    for (const LogSeries& s : substitute_branch(compute_Lp(params.a, params.b, N), branch, params.lambda))
        e.add(0, s);
    CkSequence C = compute_Ck(params, N == 0 ? 0 : N - 1, method);
    e.add(1, exponential_part(params, C.values, N));
    e.canonicalize();
    return e;
}

}  // namespace hyperasym
