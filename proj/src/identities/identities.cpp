#include "hyperasym/identities/identities.hpp"

#include "hyperasym/exact/params.hpp"
#include "hyperasym/hring/eval.hpp"
#include "hyperasym/hring/factory.hpp"
#include "hyperasym/numerics/special.hpp"

#include <algorithm>
#include <cmath>

namespace hyperasym {

Json to_json(const IdentityReport& r)
{
    Json j{{"identity", r.identity}, {"depth", r.depth}, {"status", r.ok ? "ok" : "fail"}};
    j["first_failure"] = r.first_failure ? Json(*r.first_failure) : Json(nullptr);
    if (r.max_error > 0)
        j["max_error"] = r.max_error;
    if (!r.detail.empty())
        j["detail"] = r.detail;
    return j;
}

ESeries e_product(const ESeries& f, const ESeries& g)
{
    std::size_t N = std::min(f.size(), g.size());
    ESeries out(N);
    for (std::size_t n = 0; n < N; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            out[n] += CycloNumber(Rational(binomial(n, k))) * f[k] * g[n - k];
    return out;
}

namespace {

ESeries exp_series(const CycloNumber& beta, std::size_t N)
{
    ESeries e(N);
    CycloNumber p(1);
    for (std::size_t n = 0; n < N; ++n) {
        e[n] = p;
        p *= beta;
    }
    return e;
}

// pFq(gamma z) as an E-series with cyclotomic parameters.
ESeries hyp_series(const std::vector<CycloNumber>& a, const std::vector<CycloNumber>& b, const CycloNumber& gamma,
                   std::size_t N)
{
    ESeries e(N);
    CycloNumber t(1);
    for (std::size_t n = 0; n < N; ++n) {
        if (n > 0) {
            CycloNumber m(static_cast<long>(n - 1));
            for (const auto& x : a)
                t *= x + m;
            for (const auto& x : b)
                t /= x + m;
            t *= gamma;
        }
        e[n] = t;  // (a)_n/(b)_n gamma^n: coefficient of z^n/n!
    }
    return e;
}

IdentityReport compare(std::string name, const ESeries& lhs, const ESeries& rhs)
{
    IdentityReport r;
    r.identity = std::move(name);
    r.depth = lhs.size() - 1;
    for (std::size_t n = 0; n < lhs.size(); ++n)
        if (!(lhs[n] == rhs[n])) {
            r.ok = false;
            r.first_failure = n;
            break;
        }
    return r;
}

}  // namespace

IdentityReport check_L_identity(std::size_t N)
{
    ESeries lhs(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        Integer s(0);
        for (std::size_t k = 0; k <= n; ++k)
            s += binomial(n, k) * binomial(n + k, n);
        lhs[n] = CycloNumber(Rational(s));
    }
    CycloNumber sqrt2 = CycloNumber::sqrt2();
    ESeries rhs = e_product(exp_series(CycloNumber(3) - CycloNumber(2) * sqrt2, N + 1),
                            hyp_series({CycloNumber(Rational(1, 2))}, {CycloNumber(1)}, CycloNumber(4) * sqrt2, N + 1));
    return compare("L", lhs, rhs);
}

IdentityReport check_H_identity(std::size_t N)
{
    ESeries lhs(N + 1);
    Rational h;
    for (std::size_t n = 0; n <= N; ++n) {
        if (n > 0)
            h += Rational(1) / Rational(static_cast<long>(n));
        lhs[n] = CycloNumber(h);
    }
    ESeries inner = e_product(exp_series(CycloNumber(1), N + 1),
                              hyp_series({CycloNumber(1), CycloNumber(1)}, {CycloNumber(2), CycloNumber(2)},
                                         CycloNumber(-1), N + 1));
    // multiplication by z: c_n -> n c_{n-1}
    ESeries rhs(N + 1);
    for (std::size_t n = 1; n <= N; ++n)
        rhs[n] = CycloNumber(static_cast<long>(n)) * inner[n - 1];
    return compare("H", lhs, rhs);
}

IdentityReport check_alpha_identity(const CycloNumber& alpha, std::size_t N)
{
    ESeries lhs = hyp_series({alpha + CycloNumber(1)}, {alpha}, CycloNumber(1), N + 1);
    ESeries rhs(N + 1);
    for (std::size_t n = 0; n <= N; ++n)
        rhs[n] = CycloNumber(1) + CycloNumber(static_cast<long>(n)) / alpha;
    return compare("alpha", lhs, rhs);
}

std::vector<CycloNumber> annihilator_residual(unsigned s, const CycloNumber& alpha, std::size_t N,
                                              AnnihilatorForm form, const CycloNumber& perturb_q)
{
    auto pw = [](const CycloNumber& x, unsigned e) {
        CycloNumber r(1);
        for (unsigned i = 0; i < e; ++i)
            r *= x;
        return r;
    };
    const bool corr = form == AnnihilatorForm::Corrected;
    auto P = [&](const CycloNumber& x) {
        CycloNumber v = (x + CycloNumber(2)) * pw(x + CycloNumber(1), s + 1);
        return corr ? x * v : v;
    };
    auto Q = [&](const CycloNumber& x) {
        CycloNumber v = corr ? -(x * (x + CycloNumber(1)) * (pw(x + CycloNumber(1), s) + alpha * pw(x, s)))
                             : (x + CycloNumber(1)) * (alpha * pw(x, s) - pw(x + CycloNumber(1), s));
        return v + perturb_q;
    };
    auto R = [&](const CycloNumber& x) { return alpha * pw(x, corr ? s + 1 : s); };

    // c_n = S_{n-1}/n!, S_m = sum_{k=1}^m alpha^k / k^s
    std::vector<CycloNumber> c(N + 1);
    CycloNumber S(0), ak(1);
    Rational fact(1);
    for (std::size_t n = 1; n <= N; ++n) {
        fact *= Rational(static_cast<long>(n));
        if (n >= 2)
            c[n] = S / CycloNumber(fact);
        ak *= alpha;
        S += ak / CycloNumber(Rational(pw(CycloNumber(static_cast<long>(n)), s).to_rational()));
    }
    // z^d X(theta - shift) sends c_m z^m to X(m - shift) c_m z^{m+d}
    std::vector<CycloNumber> out(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        CycloNumber x(static_cast<long>(n) - 2);
        CycloNumber v = P(x) * c[n];
        if (n >= 1)
            v += Q(x) * c[n - 1];
        if (n >= 2)
            v += R(x) * c[n - 2];
        out[n] = v;
    }
    return out;
}

IdentityReport check_annihilator(unsigned s, const CycloNumber& alpha, std::size_t N, AnnihilatorForm form,
                                 const CycloNumber& perturb_q)
{
    IdentityReport r;
    r.identity = std::string("annihilator[") + (form == AnnihilatorForm::Printed ? "printed" : "corrected") +
                 ",s=" + std::to_string(s) + ",alpha=" + alpha.str() + "]";
    r.depth = N;
    auto res = annihilator_residual(s, alpha, N, form, perturb_q);
    for (std::size_t n = 0; n <= N; ++n)
        if (!res[n].is_zero()) {
            r.ok = false;
            r.first_failure = n;
            r.detail = "coefficient of z^" + std::to_string(n) + " is " + res[n].str();
            break;
        }
    return r;
}

namespace {

struct GaussCtx {
    int P;
    Bits wb;
    BigComplex gamma_e;
    GaussCtx(int p) : P(p), wb(digits_to_bits(p + kGuardDigits)), gamma_e(n_euler_gamma(p + 5)) {}
    BigComplex mu_pow(unsigned q, long k) const { return embed(CycloNumber::root_of_unity(q, k), wb); }
    BigComplex li(long s, unsigned q, long k) const { return n_polylog(s, mu_pow(q, k), P + 5); }
};

void record(IdentityReport& r, std::size_t idx, const BigComplex& lhs, const BigComplex& rhs, double tol)
{
    double e = relative_error(lhs, rhs).to_double();
    r.max_error = std::max(r.max_error, e);
    if (!(e <= tol) && r.ok) {
        r.ok = false;
        r.first_failure = idx;
    }
}

}  // namespace

std::vector<IdentityReport> check_gauss_suite(unsigned qmax, unsigned smax, int P)
{
    GaussCtx ctx(P);
    const double tol = std::pow(10.0, 4 - P);
    auto mk = [&](const char* name) {
        IdentityReport r;
        r.identity = name;
        r.depth = qmax;
        return r;
    };
    IdentityReport g1 = mk("gauss1"), g2 = mk("gauss2"), g3 = mk("gauss3"), g4 = mk("gauss4"), g5 = mk("gauss5"),
                   rt = mk("gauss3_gauss4_roundtrip"), sym = mk("symbolic_rewrites");
    std::size_t idx = 0;
    for (unsigned q = 1; q <= qmax; ++q) {
        BigComplex lq(log(Real(static_cast<long>(q), ctx.wb)));
        for (unsigned p = 1; p <= q; ++p, ++idx) {
            Rational r(static_cast<long>(p), static_cast<long>(q));
            BigComplex psi = n_psi_k(0, r, P + 5);
            // gauss1: Psi(p/q) = -gamma - log q - sum_{n<q} mu^{-np} Li_1(mu^n)
            BigComplex rhs = -ctx.gamma_e - lq;
            for (unsigned n = 1; n < q; ++n)
                rhs -= ctx.mu_pow(q, -static_cast<long>(n * p)) * ctx.li(1, q, n);
            record(g1, idx, psi, rhs, tol);
            // gauss2: Li_1(mu^p) = -(1/q) sum_{n=1}^q mu^{np} Psi(n/q), p != q
            if (p != q) {
                BigComplex acc(ctx.wb);
                for (unsigned n = 1; n <= q; ++n)
                    acc += ctx.mu_pow(q, static_cast<long>(n * p)) *
                           n_psi_k(0, Rational(static_cast<long>(n), static_cast<long>(q)), P + 5);
                acc = -acc / BigComplex(static_cast<long>(q), ctx.wb);
                record(g2, idx, ctx.li(1, q, p), acc, tol);
            }
            // gauss5: Psi(x + n) = Psi(x) + sum_{k<n} 1/(k + x)
            for (long n = 1; n <= 4; ++n) {
                BigComplex lhs = n_psi_k(0, r + Rational(n), P + 5);
                BigComplex rhs5 = psi;
                for (long k = 0; k < n; ++k)
                    rhs5 += BigComplex(Rational(1) / (Rational(k) + r), ctx.wb);
                record(g5, idx, lhs, rhs5, tol);
            }
            // symbolic rewrites of Psi and Li into normal form
            record(sym, idx, h_eval(h_psi(r), P + 5), psi, tol);
            for (unsigned s = 1; s <= smax; ++s)
                if (!(s == 1 && p == q))
                    record(sym, idx, h_eval(h_polylog(s, CycloNumber::root_of_unity(q, p)), P + 5), ctx.li(s, q, p),
                           tol);
            for (unsigned s = 2; s <= smax; ++s) {
                BigComplex qs = BigComplex(pow(Real(static_cast<long>(q), ctx.wb), static_cast<long>(s)));
                // gauss3: zeta(s, p/q) = q^{s-1} sum_{n=1}^q mu^{-np} Li_s(mu^n)
                BigComplex acc3(ctx.wb);
                std::vector<BigComplex> lis;
                for (unsigned n = 1; n <= q; ++n) {
                    lis.push_back(ctx.li(s, q, n));
                    acc3 += ctx.mu_pow(q, -static_cast<long>(n * p)) * lis.back();
                }
                acc3 = acc3 * qs / BigComplex(static_cast<long>(q), ctx.wb);
                BigComplex hz = n_hurwitz(static_cast<long>(s), r, P + 5);
                record(g3, idx, hz, acc3, tol);
                // gauss4: Li_s(mu^p) = q^{-s} sum_{n=1}^q mu^{np} zeta(s, n/q)
                BigComplex acc4(ctx.wb);
                std::vector<BigComplex> zs;
                for (unsigned n = 1; n <= q; ++n) {
                    zs.push_back(n_hurwitz(static_cast<long>(s), Rational(static_cast<long>(n), static_cast<long>(q)), P + 5));
                    acc4 += ctx.mu_pow(q, static_cast<long>(n * p)) * zs.back();
                }
                acc4 = acc4 / qs;
                record(g4, idx, lis[p - 1], acc4, tol);
                // round trip: feed gauss4 values of Li_s into gauss3
                BigComplex rt3(ctx.wb);
                for (unsigned n = 1; n <= q; ++n) {
                    BigComplex l4(ctx.wb);
                    for (unsigned m = 1; m <= q; ++m)
                        l4 += ctx.mu_pow(q, static_cast<long>(n * m)) * zs[m - 1];
                    rt3 += ctx.mu_pow(q, -static_cast<long>(n * p)) * (l4 / qs);
                }
                rt3 = rt3 * qs / BigComplex(static_cast<long>(q), ctx.wb);
                record(rt, idx, rt3, hz, tol);
            }
        }
    }
    return {g1, g2, g3, g4, g5, rt, sym};
}

}  // namespace hyperasym
