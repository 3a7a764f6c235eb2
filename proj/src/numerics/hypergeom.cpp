#include "hyperasym/numerics/hypergeom.hpp"

#include <algorithm>
#include <cmath>

namespace hyperasym {

namespace {

struct SumResult {
    BigComplex value;
    Real err;  // bound on |value - exact|
    Real abs_sum;
};

// Numerator/denominator pairs for the term-ratio bound. The denominators are
// the b's plus the 1 coming from n!.
struct RatioBound {
    double z_abs = 0;
    std::vector<std::pair<double, double>> pairs;  // (|a - d|, |d|)
    std::vector<double> unpaired;                  // |d|
    double max_d = 0;

    // Upper bound for |t_{m+1}/t_m| valid for all m >= n (n > max_d).
    double at(long n) const
    {
        double r = z_abs;
        double dn = static_cast<double>(n);
        for (auto [diff, d] : pairs)
            r *= 1.0 + diff / (dn - d);
        for (double d : unpaired)
            r /= dn - d;
        return r * (1.0 + 1e-12);
    }
};

SumResult sum_series(const std::vector<Rational>& a, const std::vector<Rational>& b, const BigComplex& z,
                     const RatioBound& rb, Bits w, double target_log2, bool terminating)
{
    BigComplex zw = z.with_prec(w);
    BigComplex t(1, w);
    BigComplex s(w);
    Real abs_sum(0, 64);
    Real round_err(0, 64);
    Real tail(0, 64);
    double terms_cost = static_cast<double>(a.size() + b.size() + 3);
    const long max_terms = 2000000;
    for (long n = 0;; ++n) {
        s += t;
        Real at = abs(t).with_prec(64);
        abs_sum += at;
        round_err += at * Real::from_double(4.0 * terms_cost * static_cast<double>(n + 1), 64);
        // next term
        bool zero_next = false;
        for (const auto& x : a) {
            Rational an = x + Rational(n);
            if (an.is_zero()) {
                zero_next = true;
                break;
            }
        }
        if (zero_next) {
            tail = Real(0, 64);
            break;
        }
        BigComplex nt = t * zw;
        for (const auto& x : a)
            nt *= Real(x + Rational(n), w);
        Real den(n + 1, w);
        for (const auto& x : b)
            den *= Real(x + Rational(n), w);
        nt.re() /= den;
        nt.im() /= den;
        t = std::move(nt);
        long m = n + 1;
        if (!terminating && static_cast<double>(m) > rb.max_d + 1) {
            double rho = rb.at(m);
            if (rho < 1.0) {
                Real tb = abs(t).with_prec(64) * Real::from_double(1.0 / (1.0 - rho), 64);
                Real sabs = abs(s).with_prec(64);
                if (!sabs.is_zero() && tb.exponent() - sabs.exponent() < static_cast<long>(target_log2) - 2) {
                    tail = tb;
                    break;
                }
            }
        }
        if (m > max_terms)
            throw NumericError("pFq: too many terms");
    }
    Real err = tail + ldexp(round_err + abs_sum * Real::from_double(1.0, 64), -static_cast<long>(w) + 1);
    return {s, err, abs_sum};
}

}  // namespace

BigComplex n_pFq(const std::vector<Rational>& a, const std::vector<Rational>& b, const BigComplex& z, int P)
{
    for (const auto& x : b)
        if (x.is_nonpositive_integer())
            throw std::domain_error("pFq: lower parameter at a non-positive integer");
    bool terminating = std::any_of(a.begin(), a.end(), [](const Rational& x) { return x.is_nonpositive_integer(); });
    Real zabs = abs(z);
    if (!terminating) {
        if (a.size() > b.size() + 1)
            throw std::domain_error("pFq: divergent series (p > q + 1)");
        if (a.size() == b.size() + 1 && zabs >= Real(1, 64))
            throw std::domain_error("pFq: |z| >= 1 outside the disc of convergence");
    }
    int target = P + 10;
    if (z.is_zero())
        return BigComplex(1, digits_to_bits(P + kGuardDigits));

    RatioBound rb;
    rb.z_abs = zabs.to_double();
    std::vector<Rational> dens = b;
    dens.push_back(Rational(1));
    for (std::size_t i = 0; i < dens.size(); ++i) {
        double d = dens[i].abs().to_double();
        rb.max_d = std::max(rb.max_d, d);
        if (i < a.size())
            rb.pairs.push_back({(a[i] - dens[i]).abs().to_double(), d});
        else
            rb.unpaired.push_back(d);
    }
    double target_log2 = -static_cast<double>(target) * 3.321928094887362;
    Bits w = digits_to_bits(P + kGuardDigits) + 32;
    for (int attempt = 0; attempt < 6; ++attempt) {
        SumResult r = sum_series(a, b, z, rb, w, target_log2, terminating);
        Real sabs = abs(r.value).with_prec(64);
        if (!sabs.is_zero() && r.err.exponent() - sabs.exponent() < static_cast<long>(target_log2) - 1)
            return r.value;
        // needed bits: cancellation ratio abs_sum/|S| plus target
        long cancel = sabs.is_zero() ? static_cast<long>(w) : r.abs_sum.exponent() - sabs.exponent();
        Bits need = digits_to_bits(target) + static_cast<Bits>(std::max(cancel, 0L)) + 64;
        w = std::max(need, w * 2);
        if (w > 2000000)
            break;
    }
    throw NumericError("pFq: could not certify error bound");
}

BigComplex n_pFq(const HyperParams& params, const BigComplex& z, int P)
{
    if (params.lambda.is_one())
        return n_pFq(params.a, params.b, z, P);
    Bits w = std::max(z.prec(), digits_to_bits(P + kGuardDigits + 10));
    return n_pFq(params.a, params.b, embed(params.lambda, w) * z.with_prec(w), P);
}

}  // namespace hyperasym
