#include "hyperasym/numerics/special.hpp"

#include "hyperasym/numerics/bernoulli.hpp"

#include <cmath>
#include <numbers>

namespace hyperasym {

namespace {

constexpr double kLn10 = 2.302585092994046;

double log10_of(const Integer& z)
{
    if (z == 0)
        return -1e300;
    long e = 0;
    double m = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::log10(std::fabs(m)) + static_cast<double>(e) * std::log10(2.0);
}

double log10_abs(const Rational& q)
{
    return log10_of(q.num()) - log10_of(q.den());
}

Real real_of(const Rational& q, Bits prec)
{
    return Real(q, prec);
}

}  // namespace

BigComplex n_gamma(const Rational& r, int P)
{
    if (r.is_nonpositive_integer())
        throw std::domain_error("Gamma has a pole at " + r.str());
    Bits wb = digits_to_bits(P + kGuardDigits);
    Real x(r, wb);
    Real g(wb);
    mpfr_gamma(g.ptr(), x.ptr(), MPFR_RNDN);
    return BigComplex(g);
}

BigComplex n_gamma(const BigComplex& z, int P)
{
    int target = P + kGuardDigits;
    Bits wb = digits_to_bits(target + 10);
    if (z.im().is_zero()) {
        if (mpfr_integer_p(z.re().ptr()) && z.re().sign() <= 0)
            throw std::domain_error("Gamma has a pole at a non-positive integer");
        Real x = z.re().with_prec(wb);
        Real g(wb);
        mpfr_gamma(g.ptr(), x.ptr(), MPFR_RNDN);
        return BigComplex(g);
    }
    BigComplex w = z.with_prec(wb);
    Real half = Real(Rational(1, 2), wb);
    if (w.re() < half) {
        // Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
        Real pi = const_pi(wb);
        BigComplex one(1, wb);
        BigComplex s = sin(w * pi);
        return BigComplex(pi) / (s * n_gamma(one - w, P));
    }
    double X = target + 10.0;
    for (int attempt = 0; attempt < 8; ++attempt, X *= 2) {
        double re = w.re().to_double();
        long N = re < X ? static_cast<long>(std::ceil(X - re)) : 0;
        BigComplex v = w;
        BigComplex prod(1, wb);
        for (long j = 0; j < N; ++j) {
            prod *= v;
            v.re() += Real(1, wb);
        }
        double absv = abs(v).to_double();
        // Remainder after M terms is bounded by the next term times
        // sec^{2M+2}(arg/2) <= 2^{M+1}, valid for Re v > 0.
        long M = -1;
        for (long m = 1; m < 4 * target; ++m) {
            double lb = log10_abs(bernoulli(static_cast<unsigned long>(2 * m + 2))) -
                        std::log10(static_cast<double>((2 * m + 2) * (2 * m + 1))) -
                        static_cast<double>(2 * m + 1) * std::log10(absv) +
                        static_cast<double>(m + 1) * std::log10(2.0);
            if (lb < -(target + 2)) {
                M = m;
                break;
            }
        }
        if (M < 0)
            continue;
        Real pi = const_pi(wb);
        BigComplex lv = log(v);
        BigComplex acc = (v - BigComplex(half)) * lv - v;
        acc.re() += ldexp(log(ldexp(pi, 1)), -1);
        BigComplex vinv = BigComplex(1, wb) / v;
        BigComplex vinv2 = vinv * vinv;
        BigComplex vp = vinv;
        for (long k = 1; k <= M; ++k) {
            Rational c = bernoulli(static_cast<unsigned long>(2 * k)) / Rational(2 * k * (2 * k - 1));
            acc += vp * real_of(c, wb);
            vp *= vinv2;
        }
        return exp(acc) / prod;
    }
    throw NumericError("complex Gamma: could not certify Stirling remainder");
}

BigComplex n_hurwitz(const Real& s, const Rational& a, int P)
{
    if (s <= Real(1, 64))
        throw std::domain_error("Hurwitz zeta needs s > 1");
    bool s_integer = mpfr_integer_p(s.ptr()) != 0;
    if (a.is_nonpositive_integer())
        throw std::domain_error("Hurwitz zeta undefined at a = " + a.str());
    if (a.sign() < 0 && !s_integer)
        throw std::domain_error("Hurwitz zeta with negative a needs integer s");
    int target = P + kGuardDigits;
    double sd = s.to_double();
    double ad = a.to_double();
    long N = std::max(10L, static_cast<long>(P));
    if (ad < 0)
        N += static_cast<long>(std::ceil(-ad));
    long M = P / 2 + 8;
    // Lower bound for the value: zeta(s,a) >= (a+N)^{1-s}/(s-1) crude, so use
    // an absolute target scaled by the tail integral.
    for (;;) {
        double x = ad + static_cast<double>(N);
        double lb = std::log10(4.0) + (std::lgamma(sd + 2.0 * M) - std::lgamma(sd)) / kLn10 -
                    2.0 * M * std::log10(2 * std::numbers::pi) + (-sd - 2.0 * M + 1.0) * std::log10(x) -
                    std::log10(sd + 2.0 * M - 1.0);
        double scale = (1.0 - sd) * std::log10(x) - std::log10(sd - 1.0);
        if (lb - std::min(scale, 0.0) < -(target + 2))
            break;
        N *= 2;
        if (N > 100000000L)
            throw NumericError("Hurwitz zeta: remainder bound not reached");
    }
    Bits wb = digits_to_bits(target + 10) + static_cast<Bits>(std::log2(static_cast<double>(N)) + 1);
    Real sr = s.with_prec(wb);
    long si = s_integer ? mpfr_get_si(s.ptr(), MPFR_RNDN) : 0;
    Real acc(wb);
    for (long n = 0; n < N; ++n) {
        Real x(a + Rational(n), wb);
        acc += s_integer ? pow(x, -si) : exp(-sr * log(x));
    }
    Real x(a + Rational(N), wb);
    Real xs = s_integer ? pow(x, -si) : exp(-sr * log(x));
    acc += x * xs / (sr - Real(1, wb));
    acc += ldexp(xs, -1);
    Real poch = sr;
    Real xpow = xs / x;
    Real xinv2 = Real(1, wb) / (x * x);
    Integer fact2k(2);
    for (long k = 1; k <= M; ++k) {
        Rational c = bernoulli(static_cast<unsigned long>(2 * k)) / Rational(fact2k);
        acc += real_of(c, wb) * poch * xpow;
        poch *= (sr + Real(2 * k - 1, wb)) * (sr + Real(2 * k, wb));
        xpow *= xinv2;
        fact2k *= (2 * k + 1) * (2 * k + 2);
    }
    return BigComplex(acc);
}

BigComplex n_hurwitz(long s, const Rational& a, int P)
{
    return n_hurwitz(Real(s, 64), a, P);
}

namespace {

// psi(a) for non-integer or positive a.
Real digamma(const Rational& a, int P)
{
    if (a.is_nonpositive_integer())
        throw std::domain_error("digamma has a pole at " + a.str());
    int target = P + kGuardDigits;
    double ad = a.to_double();
    long N = std::max(10L, static_cast<long>(P));
    if (ad < 0)
        N += static_cast<long>(std::ceil(-ad));
    long M = P / 2 + 8;
    for (;;) {
        double x = ad + static_cast<double>(N);
        // |R| <= |B_{2M+2}| / ((2M+2) x^{2M+2})
        double lb = log10_abs(bernoulli(static_cast<unsigned long>(2 * M + 2))) - std::log10(2.0 * M + 2) -
                    (2.0 * M + 2) * std::log10(x);
        if (lb < -(target + 2))
            break;
        N *= 2;
        if (N > 100000000L)
            throw NumericError("digamma: remainder bound not reached");
    }
    Bits wb = digits_to_bits(target + 10) + static_cast<Bits>(std::log2(static_cast<double>(N)) + 1);
    Real x(a + Rational(N), wb);
    Real acc = log(x) - Real(1, wb) / ldexp(x, 1);
    Real xinv2 = Real(1, wb) / (x * x);
    Real xp = xinv2;
    for (long k = 1; k <= M; ++k) {
        Rational c = bernoulli(static_cast<unsigned long>(2 * k)) / Rational(2 * k);
        acc -= real_of(c, wb) * xp;
        xp *= xinv2;
    }
    for (long n = 0; n < N; ++n)
        acc -= Real(1, wb) / Real(a + Rational(n), wb);
    return acc;
}

}  // namespace

BigComplex n_psi_k(unsigned long k, const Rational& r, int P)
{
    if (k == 0)
        return BigComplex(digamma(r, P));
    BigComplex z = n_hurwitz(static_cast<long>(k + 1), r, P);
    Real f(factorial(k), z.prec());
    if (k % 2 == 0)
        f = -f;
    return z * f;
}

BigComplex n_euler_gamma(int P)
{
    // gamma = H_{N-1} - psi(N) with psi(N) by its asymptotic series.
    int target = P + kGuardDigits;
    long N = std::max(10L, static_cast<long>(P));
    long M = P / 2 + 8;
    for (;;) {
        double lb = log10_abs(bernoulli(static_cast<unsigned long>(2 * M + 2))) - std::log10(2.0 * M + 2) -
                    (2.0 * M + 2) * std::log10(static_cast<double>(N));
        if (lb < -(target + 2))
            break;
        N *= 2;
    }
    Bits wb = digits_to_bits(target + 10) + static_cast<Bits>(std::log2(static_cast<double>(N)) + 1);
    Real h(wb);
    for (long n = 1; n < N; ++n)
        h += Real(1, wb) / Real(n, wb);
    Real x(N, wb);
    Real psi = log(x) - Real(1, wb) / ldexp(x, 1);
    Real xinv2 = Real(1, wb) / (x * x);
    Real xp = xinv2;
    for (long k = 1; k <= M; ++k) {
        Rational c = bernoulli(static_cast<unsigned long>(2 * k)) / Rational(2 * k);
        psi -= real_of(c, wb) * xp;
        xp *= xinv2;
    }
    return BigComplex(h - psi);
}

Real n_zeta_int(long s, int P)
{
    if (s == 1)
        throw std::domain_error("zeta has a pole at 1");
    Bits wb = digits_to_bits(P + kGuardDigits);
    if (s >= 2)
        return n_hurwitz(s, Rational(1), P).re();
    // zeta(-m) = (-1)^m B_{m+1} / (m+1)
    unsigned long m = static_cast<unsigned long>(-s);
    Rational v = bernoulli(m + 1) / Rational(static_cast<long>(m + 1));
    if (m % 2 == 1)
        v = -v;
    return Real(v, wb);
}

BigComplex n_polylog(long s, const BigComplex& z, int P)
{
    if (s < 1)
        throw std::invalid_argument("polylog order must be positive");
    int target = P + kGuardDigits;
    Bits wb = digits_to_bits(target + 10);
    BigComplex w = z.with_prec(wb);
    Real az = abs(w);
    Real one(1, wb);
    if (az > one + ldexp(one, -(static_cast<long>(wb) / 2)))
        throw std::domain_error("polylog argument outside the closed unit disc");
    bool at_one = (w.re() == one) && w.im().is_zero();
    if (s == 1) {
        if (at_one)
            throw std::domain_error("Li_1 diverges at z = 1");
        return -log(BigComplex(1, wb) - w);
    }
    if (at_one)
        return BigComplex(n_zeta_int(s, P).with_prec(wb));
    if (az <= Real(Rational(1, 2), wb)) {
        // sum z^n / n^s, tail <= |z|^{K+1} / (1 - |z|)
        BigComplex acc(wb), zn = w;
        Real tol = pow10(-(target + 2), wb);
        Real denom = one - az;
        for (long n = 1;; ++n) {
            acc += zn * pow(Real(n, wb), -s);
            zn *= w;
            if (abs(zn) / denom < tol * abs(acc))
                break;
            if (n > 100000)
                throw NumericError("polylog: direct sum did not certify");
        }
        return acc;
    }
    BigComplex mu = log(w);
    Real two_pi = ldexp(const_pi(wb), 1);
    double r = (abs(mu) / two_pi).to_double();
    if (r > 0.75)
        throw NumericError("polylog: log-series ratio too large");
    // Tail after K terms <= 4 (2 pi)^{s-1} r^{K+1} / (1 - r); |Li_s| >= 0.17 here.
    double lead = std::log10(4.0) + static_cast<double>(s - 1) * std::log10(2 * std::numbers::pi) -
                  std::log10(1 - r);
    long K = s + 1;
    while (lead + static_cast<double>(K + 1) * std::log10(std::max(r, 1e-300)) > -(target + 2) - 1)
        ++K;
    BigComplex acc(wb);
    BigComplex term(1, wb);  // mu^k / k!
    for (long k = 0; k <= K; ++k) {
        if (k > 0) {
            term *= mu;
            term *= Real(1, wb) / Real(k, wb);
        }
        if (k == s - 1) {
            Real h(wb);
            for (long j = 1; j <= s - 1; ++j)
                h += Real(1, wb) / Real(j, wb);
            BigComplex l = log(-mu);
            acc += term * (BigComplex(h) - l);
            continue;
        }
        Real zk = n_zeta_int(s - k, P + 10).with_prec(wb);
        if (zk.is_zero())
            continue;
        acc += term * zk;
    }
    return acc;
}

BigComplex n_polylog_unity(long s, const Rational& r, int P)
{
    Rational f = r.frac();
    int target = P + kGuardDigits;
    Bits wb = digits_to_bits(target + 10);
    if (s == 1) {
        if (f.is_zero())
            throw std::domain_error("Li_1 diverges at z = 1");
        BigComplex z = embed(CycloNumber::exp_2pi_i(f), wb);
        return -log(BigComplex(1, wb) - z);
    }
    if (s < 1)
        throw std::invalid_argument("polylog order must be positive");
    // Li_s(mu^p) = q^{-s} sum_{n=1}^{q} mu^{np} zeta(s, n/q)
    long q = f.den().get_si();
    long p = f.num().get_si();
    BigComplex acc(wb);
    for (long n = 1; n <= q; ++n) {
        BigComplex phase = embed(CycloNumber::root_of_unity(static_cast<unsigned long>(q), n * p), wb);
        acc += phase * n_hurwitz(s, Rational(Integer(n), Integer(q)), P + 5);
    }
    return acc * pow(Real(q, wb), -s);
}

}  // namespace hyperasym
