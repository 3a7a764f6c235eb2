#pragma once

#include "hyperasym/exact/rational.hpp"

#include <mpfr.h>

#include <string>

namespace hyperasym {

using Bits = mpfr_prec_t;

Bits digits_to_bits(int digits);

// RAII mpfr_t. Binary operations round to the larger operand precision.
class Real {
public:
    explicit Real(Bits prec = 64);
    Real(long v, Bits prec);
    Real(const Rational& q, Bits prec);
    Real(const Integer& z, Bits prec);
    static Real from_double(double v, Bits prec);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    mpfr_ptr ptr() { return v_; }
    mpfr_srcptr ptr() const { return v_; }
    Bits prec() const { return mpfr_get_prec(v_); }
    Real with_prec(Bits p) const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // Binary exponent e with 2^{e-1} <= |x| < 2^e; very negative for zero.
    long exponent() const;
    // Decimal string with `digits` significant digits, deterministic layout.
    std::string to_string(int digits) const;

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    Real operator-() const;

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

private:
    mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real hypot(const Real& x, const Real& y);
Real const_pi(Bits prec);
Real const_euler_mpfr(Bits prec);
Real ldexp(const Real& x, long e);
// 10^{e} at the given precision.
Real pow10(long e, Bits prec);

}  // namespace hyperasym
