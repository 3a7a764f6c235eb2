#include "hyperasym/continuation/continuation.hpp"

#include "hyperasym/asymp/residue.hpp"
#include "hyperasym/expansion/evaluate.hpp"
#include "hyperasym/hring/factory.hpp"

#include <stdexcept>

namespace hyperasym {

namespace {

void check_shape(const HyperParams& params)
{
    params.validate();
    if (params.p() != params.q() + 1)
        throw std::invalid_argument("continuation needs p = q + 1");
    if (!params.lambda.is_one())
        throw std::invalid_argument("continuation supports lambda = 1 only");
    for (const auto& a : params.a)
        if (a.is_nonpositive_integer())
            throw std::invalid_argument("terminating series has no continuation problem");
}

}  // namespace

AsymptoticExpansion compute_Mp(const HyperParams& params, std::size_t N)
{
    check_shape(params);
    AsymptoticExpansion e;
    e.domain = "continuation";
    e.depth = N;
    HElement pre(1);
    for (const auto& b : params.b)
        pre *= h_gamma(b);
    for (const auto& a : params.a)
        pre *= h_reciprocal_gamma(a);
    e.prefactor = pre;
    for (const LogSeries& s : compute_Lp(params.a, params.b, N))
        e.add(0, s);
    e.canonicalize();
    return e;
}

AsymptoticExpansion distinct_case_formula(const HyperParams& params, std::size_t N)
{
    check_shape(params);
    const auto& a = params.a;
    const auto& b = params.b;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if ((a[i] - a[j]).is_integer())
                throw std::invalid_argument("distinct_case_formula: parameters equal mod Z");
    AsymptoticExpansion e;
    e.domain = "continuation";
    e.depth = N;
    for (std::size_t j = 0; j < a.size(); ++j) {
        HElement Q(1);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (i != j)
                Q *= h_gamma(a[i] - a[j]) * h_reciprocal_gamma(a[i]);
        for (const auto& x : b)
            Q *= h_gamma(x) * h_reciprocal_gamma(x - a[j]);
        LogSeries s(a[j], N);
        Rational T(1);
        for (std::size_t k = 0; k < N; ++k) {
            if (k > 0) {
                Rational kk(static_cast<long>(k - 1));
                T *= a[j] + kk;
                for (const auto& x : b)
                    T *= Rational(1) - x + a[j] + kk;
                for (std::size_t i = 0; i < a.size(); ++i)
                    if (i != j)
                        T /= Rational(1) - a[i] + a[j] + kk;
                T /= Rational(-static_cast<long>(k));
            }
            if (T != 0)
                s.set(0, k, Q * CycloNumber(T));
        }
        s.trim();
        e.add(0, s);
    }
    e.canonicalize();
    return e;
}

BigComplex evaluate_continuation(const AsymptoticExpansion& e, const BigComplex& z, int P, std::size_t max_depth)
{
    if (e.domain != "continuation")
        throw std::invalid_argument("not a continuation expansion");
    return evaluate_expansion(e, -z, P, max_depth);
}

}  // namespace hyperasym
