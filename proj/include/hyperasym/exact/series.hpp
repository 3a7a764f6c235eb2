#pragma once

#include "hyperasym/exact/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hyperasym {

// Truncated power series helpers over any commutative ring T that admits
// multiplication by Rational. A series is a coefficient vector, index = power.

template <class T>
std::vector<T> series_mul(const std::vector<T>& f, const std::vector<T>& g, std::size_t order)
{
    std::vector<T> out(order);
    for (std::size_t i = 0; i < f.size() && i < order; ++i) {
        if (f[i] == T())
            continue;
        for (std::size_t j = 0; j < g.size() && i + j < order; ++j)
            out[i + j] += f[i] * g[j];
    }
    return out;
}

// exp(f) for f with vanishing constant term: e_n = (1/n) sum_k k f_k e_{n-k}.
template <class T>
std::vector<T> series_exp(const std::vector<T>& f, std::size_t order)
{
    if (!f.empty() && !(f[0] == T()))
        throw std::invalid_argument("series_exp needs a zero constant term");
    std::vector<T> e(order);
    if (order == 0)
        return e;
    e[0] = T(1);
    for (std::size_t n = 1; n < order; ++n) {
        T acc;
        for (std::size_t k = 1; k <= n && k < f.size(); ++k) {
            if (f[k] == T())
                continue;
            T t = f[k] * e[n - k];
            t *= Rational(static_cast<long>(k));
            acc += t;
        }
        acc *= Rational(1, static_cast<long>(n));
        e[n] = std::move(acc);
    }
    return e;
}

// 1/f given inv0 = 1/f[0].
template <class T>
std::vector<T> series_inverse(const std::vector<T>& f, const T& inv0, std::size_t order)
{
    std::vector<T> g(order);
    if (order == 0)
        return g;
    g[0] = inv0;
    for (std::size_t n = 1; n < order; ++n) {
        T acc;
        for (std::size_t k = 1; k <= n && k < f.size(); ++k)
            if (!(f[k] == T()))
                acc += f[k] * g[n - k];
        g[n] = -(acc * inv0);
    }
    return g;
}

// log(1 + f) for f with vanishing constant term.
template <class T>
std::vector<T> series_log1p(const std::vector<T>& f, std::size_t order)
{
    std::vector<T> out(order);
    std::vector<T> pw = f;
    pw.resize(order);
    for (std::size_t m = 1; m < order; ++m) {
        bool any = false;
        for (std::size_t i = 0; i < order; ++i) {
            if (pw[i] == T())
                continue;
            any = true;
            T t = pw[i];
            t *= Rational(m % 2 == 1 ? 1 : -1, static_cast<long>(m));
            out[i] += t;
        }
        if (!any)
            break;
        pw = series_mul(pw, f, order);
    }
    return out;
}

}  // namespace hyperasym
