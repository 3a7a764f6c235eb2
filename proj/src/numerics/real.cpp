#include "hyperasym/numerics/real.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace hyperasym {

Bits digits_to_bits(int digits)
{
    return static_cast<Bits>(std::ceil(std::max(digits, 1) * 3.321928094887362)) + 4;
}

Real::Real(Bits prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

Real::Real(long v, Bits prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(const Rational& q, Bits prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get().get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Integer& z, Bits prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
}

Real Real::from_double(double v, Bits prec)
{
    Real r(prec);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

Real::Real(const Real& o)
{
    mpfr_init2(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept
{
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o)
{
    if (this != &o) {
        mpfr_set_prec(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept
{
    mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real()
{
    mpfr_clear(v_);
}

Real Real::with_prec(Bits p) const
{
    Real r(p);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

long Real::exponent() const
{
    if (mpfr_zero_p(v_))
        return -(1L << 40);
    return static_cast<long>(mpfr_get_exp(v_));
}

std::string Real::to_string(int digits) const
{
    if (mpfr_nan_p(v_))
        return "nan";
    if (mpfr_inf_p(v_))
        return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
    if (mpfr_zero_p(v_))
        return "0";
    mpfr_exp_t e10 = 0;
    char* raw = mpfr_get_str(nullptr, &e10, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
    std::unique_ptr<char, void (*)(char*)> guard(raw, [](char* p) { mpfr_free_str(p); });
    std::string m(raw);
    bool neg = false;
    if (!m.empty() && m[0] == '-') {
        neg = true;
        m.erase(0, 1);
    }
    // value = 0.m * 10^e10
    std::string out;
    if (e10 > -6 && e10 <= 40) {
        if (e10 <= 0) {
            out = "0." + std::string(static_cast<std::size_t>(-e10), '0') + m;
        } else if (static_cast<std::size_t>(e10) >= m.size()) {
            out = m + std::string(static_cast<std::size_t>(e10) - m.size(), '0');
        } else {
            out = m.substr(0, static_cast<std::size_t>(e10)) + "." + m.substr(static_cast<std::size_t>(e10));
        }
    } else {
        out = m.substr(0, 1) + "." + m.substr(1) + "e" + std::to_string(e10 - 1);
    }
    return neg ? "-" + out : out;
}

Real& Real::operator+=(const Real& o)
{
    if (o.prec() > prec())
        mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& o)
{
    if (o.prec() > prec())
        mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& o)
{
    if (o.prec() > prec())
        mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& o)
{
    if (o.prec() > prec())
        mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real operator+(const Real& a, const Real& b)
{
    Real r(std::max(a.prec(), b.prec()));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b)
{
    Real r(std::max(a.prec(), b.prec()));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b)
{
    Real r(std::max(a.prec(), b.prec()));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b)
{
    Real r(std::max(a.prec(), b.prec()));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real Real::operator-() const
{
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

#define HYPERASYM_UNARY(name, fn)            \
    Real name(const Real& x)                 \
    {                                        \
        Real r(x.prec());                    \
        fn(r.ptr(), x.ptr(), MPFR_RNDN);     \
        return r;                            \
    }

HYPERASYM_UNARY(abs, mpfr_abs)
HYPERASYM_UNARY(sqrt, mpfr_sqrt)
HYPERASYM_UNARY(exp, mpfr_exp)
HYPERASYM_UNARY(log, mpfr_log)
HYPERASYM_UNARY(sin, mpfr_sin)
HYPERASYM_UNARY(cos, mpfr_cos)

#undef HYPERASYM_UNARY

Real atan2(const Real& y, const Real& x)
{
    Real r(std::max(x.prec(), y.prec()));
    mpfr_atan2(r.ptr(), y.ptr(), x.ptr(), MPFR_RNDN);
    return r;
}

Real pow(const Real& x, const Real& y)
{
    Real r(std::max(x.prec(), y.prec()));
    mpfr_pow(r.ptr(), x.ptr(), y.ptr(), MPFR_RNDN);
    return r;
}

Real pow(const Real& x, long n)
{
    Real r(x.prec());
    mpfr_pow_si(r.ptr(), x.ptr(), n, MPFR_RNDN);
    return r;
}

Real hypot(const Real& x, const Real& y)
{
    Real r(std::max(x.prec(), y.prec()));
    mpfr_hypot(r.ptr(), x.ptr(), y.ptr(), MPFR_RNDN);
    return r;
}

Real const_pi(Bits prec)
{
    Real r(prec);
    mpfr_const_pi(r.ptr(), MPFR_RNDN);
    return r;
}

Real const_euler_mpfr(Bits prec)
{
    Real r(prec);
    mpfr_const_euler(r.ptr(), MPFR_RNDN);
    return r;
}

Real ldexp(const Real& x, long e)
{
    Real r(x.prec());
    mpfr_mul_2si(r.ptr(), x.ptr(), e, MPFR_RNDN);
    return r;
}

Real pow10(long e, Bits prec)
{
    Real ten(10, prec);
    return pow(ten, e);
}

}  // namespace hyperasym
