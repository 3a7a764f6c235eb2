#include "hyperasym/asymp/ck.hpp"

#include "hyperasym/expansion/operator.hpp"
#include "hyperasym/numerics/hypergeom.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace hyperasym {

const char* ck_method_name(CkMethod m)
{
    switch (m) {
    case CkMethod::Recursion: return "recursion";
    case CkMethod::ClosedForm: return "closed_form";
    case CkMethod::NumericFit: return "numeric_fit";
    }
    return "?";
}

const char* ck_reading_name(CkReading r)
{
    switch (r) {
    case CkReading::Rising: return "rising";
    case CkReading::Falling: return "falling";
    case CkReading::Corrected: return "corrected";
    }
    return "?";
}

namespace {

Rational rising(const Rational& x, unsigned long n)
{
    return pochhammer(x, n);
}

Rational falling(const Rational& x, unsigned long n)
{
    Rational r(1);
    for (unsigned long k = 0; k < n; ++k)
        r *= x - Rational(static_cast<long>(k));
    return r;
}

Rational poch(const Rational& x, unsigned long n, CkReading reading)
{
    return reading == CkReading::Falling ? falling(x, n) : rising(x, n);
}

void check_p_eq_q(const HyperParams& params)
{
    if (params.p() != params.q() || params.p() == 0)
        throw std::invalid_argument("C_k requires p = q >= 1");
}

}  // namespace

Rational e_km(const HyperParams& params, unsigned long k, unsigned long m, CkReading reading)
{
    check_p_eq_q(params);
    if (m >= k)
        throw std::invalid_argument("e_km requires m < k");
    std::vector<Rational> bb = params.b;
    bb.emplace_back(1);
    Rational v = nu(params);
    Rational out;
    for (std::size_t j = 0; j < bb.size(); ++j) {
        Rational num(1), den(1);
        for (const auto& a : params.a)
            num *= a - bb[j];
        for (std::size_t i = 0; i < bb.size(); ++i)
            if (i != j)
                den *= bb[i] - bb[j];
        if (den == 0)
            throw std::domain_error("e_km: coinciding lower parameters");
        Rational mm(static_cast<long>(m));
        Rational term = reading == CkReading::Corrected
                            ? -rising(Rational(1) - v - bb[j] + mm, k - m + 1)
                            : poch(Rational(1) - v + bb[j] + mm, k - m, reading);
        out += term * num / den;
    }
    return out;
}

std::vector<Rational> ck_via_ekm(const HyperParams& params, std::size_t K, CkReading reading)
{
    std::vector<Rational> c{Rational(1)};
    for (std::size_t k = 1; k <= K; ++k) {
        Rational s;
        for (std::size_t m = 0; m < k; ++m)
            s += e_km(params, k, m, reading) * c[m];
        c.push_back(s / Rational(static_cast<long>(k)));
    }
    return c;
}

std::vector<Rational> ck_closed_form(const HyperParams& params, std::size_t K, CkReading reading)
{
    check_p_eq_q(params);
    const std::size_t p = params.p();
    const auto& a = params.a;
    const auto& b = params.b;
    // B_j
    std::vector<Rational> B(p);
    Rational acc;
    for (std::size_t j = 0; j < p; ++j) {
        acc += reading == CkReading::Corrected ? b[j] - a[j] : b[j];
        B[j] = acc;
    }
    std::vector<Rational> out;
    for (std::size_t k = 0; k <= K; ++k) {
        Rational total;
        std::vector<unsigned long> ks(p);
        std::function<void(std::size_t, unsigned long)> rec = [&](std::size_t j, unsigned long left) {
            if (j + 1 == p) {
                ks[j] = left;
                Rational t = poch(Rational(1) - a[p - 1], ks[p - 1], reading);
                unsigned long Kprev = 0;
                for (std::size_t i = 0; i < p; ++i) {
                    if (i + 1 < p) {
                        Rational f = reading == CkReading::Corrected ? b[i + 1] - a[i] : a[i + 1] + b[i + 1] - a[i];
                        t *= poch(f, ks[i], reading);
                    }
                    t *= poch(B[i] + Rational(static_cast<long>(Kprev)), ks[i], reading);
                    t /= Rational(factorial(ks[i]));
                    Kprev += ks[i];
                }
                total += t;
                return;
            }
            for (unsigned long x = 0; x <= left; ++x) {
                ks[j] = x;
                rec(j + 1, left - x);
            }
        };
        rec(0, static_cast<unsigned long>(k));
        out.push_back(total);
    }
    return out;
}

std::vector<Rational> ck_operator(const HyperParams& params, std::size_t K)
{
    check_p_eq_q(params);
    ThetaOperator op = ThetaOperator::hypergeometric(params.a, params.b, CycloNumber(1)).conjugated_exp(CycloNumber(1));
    const int top = op.max_shift();
    const CPoly& qt = op.terms().at(top);
    Rational v = nu(params);
    if (!qt(CycloNumber(v)).is_zero())
        throw std::logic_error("ck_operator: exponent nu is not indicial");
    std::vector<Rational> c{Rational(1)};
    for (std::size_t m = 1; m <= K; ++m) {
        Rational mm(static_cast<long>(m));
        CycloNumber s(0);
        for (const auto& [d, q] : op.terms()) {
            if (d == top)
                continue;
            long idx = static_cast<long>(m) - top + d;
            if (idx < 0)
                continue;
            CycloNumber t = q(CycloNumber(v - mm + Rational(top - d)));
            t *= CycloNumber(c[static_cast<std::size_t>(idx)]);
            s += t;
        }
        CycloNumber den = qt(CycloNumber(v - mm));
        if (den.is_zero())
            throw std::domain_error("ck_operator: resonant index");
        CycloNumber r = -s / den;
        c.push_back(r.to_rational());
    }
    return c;
}

std::vector<Real> ck_numeric_fit(const HyperParams& params, std::size_t K, const NumericFitOptions& opt,
                                 double* error_estimate)
{
    check_p_eq_q(params);
    const std::size_t M = std::max(opt.unknowns, K + 2);
    const Bits prec = digits_to_bits(opt.digits + 40);
    Rational v = nu(params);
    Real gratio(1, prec);
    for (const auto& a : params.a)
        gratio *= n_gamma(a, opt.digits + 20).re().with_prec(prec);
    for (const auto& b : params.b)
        gratio /= n_gamma(b, opt.digits + 20).re().with_prec(prec);
    // Chebyshev nodes in u on [1/x_hi, 1/x_lo]
    Real ulo = Real(1, prec) / Real(opt.x_hi, prec);
    Real uhi = Real(1, prec) / Real(opt.x_lo, prec);
    Real mid = ldexp(ulo + uhi, -1), half = ldexp(uhi - ulo, -1);
    Real pi = const_pi(prec);
    std::vector<Real> u(M, Real(prec)), g(M, Real(prec));
    for (std::size_t i = 0; i < M; ++i) {
        Real t = cos(pi * Real(static_cast<long>(2 * i + 1), prec) / Real(static_cast<long>(2 * M), prec));
        u[i] = mid + half * t;
        Real x = Real(1, prec) / u[i];
        BigComplex f = n_pFq(params.a, params.b, BigComplex(x), opt.digits);
        g[i] = f.re().with_prec(prec) * exp(-x) * pow(x, -Real(v, prec)) * gratio;
    }
    // Solve sum_k c_k (u_i/mid)^k = g_i, then rescale.
    std::vector<std::vector<Real>> A(M, std::vector<Real>(M + 1, Real(prec)));
    for (std::size_t i = 0; i < M; ++i) {
        Real s = u[i] / mid, pw(1, prec);
        for (std::size_t k = 0; k < M; ++k) {
            A[i][k] = pw;
            pw *= s;
        }
        A[i][M] = g[i];
    }
    for (std::size_t col = 0; col < M; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < M; ++r)
            if (abs(A[r][col]) > abs(A[piv][col]))
                piv = r;
        std::swap(A[col], A[piv]);
        if (A[col][col].is_zero())
            throw NumericError("ck_numeric_fit: singular system");
        for (std::size_t r = col + 1; r < M; ++r) {
            Real f = A[r][col] / A[col][col];
            for (std::size_t c = col; c <= M; ++c)
                A[r][c] -= f * A[col][c];
        }
    }
    std::vector<Real> coef(M, Real(prec));
    for (std::size_t i = M; i-- > 0;) {
        Real s = A[i][M];
        for (std::size_t c = i + 1; c < M; ++c)
            s -= A[i][c] * coef[c];
        coef[i] = s / A[i][i];
    }
    std::vector<Real> out;
    Real scale(1, prec);
    for (std::size_t k = 0; k <= K; ++k) {
        out.push_back((coef[k] / scale).with_prec(digits_to_bits(opt.digits)));
        scale *= mid;
    }
    if (error_estimate) {
        // |C_0 - 1| tracks the fit error; scale by the growth of later terms
        double e0 = std::fabs((out[0] - Real(1, prec)).to_double());
        *error_estimate = e0 * std::pow(1.0 / mid.to_double(), static_cast<double>(K) / 2);
    }
    return out;
}

CkSequence compute_Ck(const HyperParams& params, std::size_t K, CkMethod method)
{
    CkSequence seq;
    seq.method = method;
    std::vector<Rational> vals;
    switch (method) {
    case CkMethod::Recursion:
        vals = ck_operator(params, K);
        break;
    case CkMethod::ClosedForm:
        vals = ck_closed_form(params, K, CkReading::Corrected);
        break;
    case CkMethod::NumericFit: {
        double err = 0;
        seq.approx = ck_numeric_fit(params, K, {}, &err);
        seq.fit_error = err;
        vals = ck_operator(params, K);
        for (std::size_t k = 0; k <= K; ++k) {
            Real d = abs(seq.approx[k] - Real(vals[k], seq.approx[k].prec()));
            Real scale = std::max(abs(Real(vals[k], 64)), Real(1, 64));
            if ((d / scale).to_double() > 1e-10)
                throw NumericError("numeric_fit disagrees with the exact recursion at k = " + std::to_string(k));
        }
        break;
    }
    }
    for (const auto& r : vals)
        seq.values.emplace_back(r);
    return seq;
}

}  // namespace hyperasym
