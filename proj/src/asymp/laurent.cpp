#include "hyperasym/asymp/laurent.hpp"

#include "hyperasym/exact/series.hpp"
#include "hyperasym/hring/factory.hpp"

namespace hyperasym {

namespace {

// log Gamma(x + sigma e) - log Gamma(x) for regular x:
// Psi(x) sigma e + sum_{k>=2} (-1)^k zeta(k, x) sigma^k e^k / k
std::vector<HElement> log_gamma_regular(const Rational& x, int sigma, std::size_t order)
{
    std::vector<HElement> l(order);
    if (order > 1)
        l[1] = h_psi(x) * CycloNumber(sigma);
    for (std::size_t k = 2; k < order; ++k) {
        long sgn = (k % 2 == 0 ? 1 : -1) * (sigma < 0 && k % 2 == 1 ? -1 : 1);
        l[k] = h_hurwitz(static_cast<long>(k), x) * CycloNumber(Rational(sgn, static_cast<long>(k)));
    }
    return l;
}

// log(1 + t e) = sum_m (-1)^{m+1} t^m e^m / m
std::vector<HElement> log_linear(const Rational& t, std::size_t order)
{
    std::vector<HElement> l(order);
    Rational pw(1);
    for (std::size_t m = 1; m < order; ++m) {
        pw *= t;
        l[m] = HElement(pw * Rational(m % 2 == 1 ? 1 : -1, static_cast<long>(m)));
    }
    return l;
}

}  // namespace

void LaurentProduct::add_log(const std::vector<HElement>& l, int sign)
{
    for (std::size_t k = 1; k < order_ && k < l.size(); ++k) {
        if (sign > 0)
            log_[k] += l[k];
        else
            log_[k] -= l[k];
    }
}

void LaurentProduct::mul_gamma(const Rational& x, int sigma)
{
    if (!x.is_nonpositive_integer()) {
        c_ = c_ * h_gamma(x);
        add_log(log_gamma_regular(x, sigma, order_), 1);
        return;
    }
    // Gamma(-N + sigma e) = Gamma(1 + sigma e) / (sigma e prod_{j=1}^{N} (sigma e - j))
    long N = -x.to_long();
    v_ -= 1;
    Rational c = Rational(sigma) * (N % 2 == 0 ? Rational(1) : Rational(-1)) * Rational(factorial(N));
    c_ *= c.inverse();
    add_log(log_gamma_regular(Rational(1), sigma, order_), 1);
    for (long j = 1; j <= N; ++j)
        add_log(log_linear(Rational(-sigma, j), order_), -1);
}

void LaurentProduct::div_gamma(const Rational& x, int sigma)
{
    if (!x.is_nonpositive_integer()) {
        c_ = c_ * h_reciprocal_gamma(x);
        add_log(log_gamma_regular(x, sigma, order_), -1);
        return;
    }
    long N = -x.to_long();
    v_ += 1;
    Rational c = Rational(sigma) * (N % 2 == 0 ? Rational(1) : Rational(-1)) * Rational(factorial(N));
    c_ *= c;
    add_log(log_gamma_regular(Rational(1), sigma, order_), -1);
    for (long j = 1; j <= N; ++j)
        add_log(log_linear(Rational(-sigma, j), order_), 1);
}

void LaurentProduct::mul_linear(const Rational& x, int sigma)
{
    if (x.is_zero()) {
        v_ += 1;
        c_ *= Rational(sigma);
        return;
    }
    c_ *= x;
    add_log(log_linear(Rational(sigma) / x, order_), 1);
}

void LaurentProduct::div_linear(const Rational& x, int sigma)
{
    if (x.is_zero()) {
        v_ -= 1;
        c_ *= Rational(sigma);
        return;
    }
    c_ *= x.inverse();
    add_log(log_linear(Rational(sigma) / x, order_), -1);
}

std::vector<HElement> LaurentProduct::exp_series() const
{
    return series_exp(log_, order_);
}

}  // namespace hyperasym
