#pragma once

#include "hyperasym/exact/cyclo.hpp"
#include "hyperasym/numerics/real.hpp"

#include <algorithm>
#include <string>

namespace hyperasym {

class BigComplex {
public:
    explicit BigComplex(Bits prec = 64) : re_(prec), im_(prec) {}
    BigComplex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit BigComplex(const Real& re) : re_(re), im_(re.prec()) {}
    BigComplex(const Rational& re, Bits prec) : re_(re, prec), im_(prec) {}
    BigComplex(long re, Bits prec) : re_(re, prec), im_(prec) {}
    static BigComplex polar(const Real& r, const Real& theta);

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    Real& re() { return re_; }
    Real& im() { return im_; }
    Bits prec() const { return std::max(re_.prec(), im_.prec()); }
    // Working precision in decimal digits implied by the binary precision.
    int digits() const;
    BigComplex with_prec(Bits p) const { return {re_.with_prec(p), im_.with_prec(p)}; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

    BigComplex& operator+=(const BigComplex& o);
    BigComplex& operator-=(const BigComplex& o);
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& operator/=(const BigComplex& o);
    BigComplex& operator*=(const Real& o);
    friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
    friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
    friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
    friend BigComplex operator*(BigComplex a, const Real& b) { return a *= b; }
    BigComplex operator-() const { return {-re_, -im_}; }

    std::string to_string(int digits) const;

private:
    Real re_, im_;
};

BigComplex conj(const BigComplex& z);
Real abs(const BigComplex& z);
Real arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);  // principal branch
BigComplex sin(const BigComplex& z);
BigComplex pow(const BigComplex& z, long n);
BigComplex pow(const BigComplex& z, const BigComplex& w);  // exp(w log z)
// |a - b| / |b| (or |a - b| when b = 0), as a low-precision Real.
Real relative_error(const BigComplex& a, const BigComplex& b);

// Complex embedding zeta_N -> e^{2 pi i / N}.
BigComplex embed(const CycloNumber& x, Bits prec);

}  // namespace hyperasym
