#include "hyperasym/numerics/complex.hpp"

#include <stdexcept>

namespace hyperasym {

BigComplex BigComplex::polar(const Real& r, const Real& theta)
{
    return {r * cos(theta), r * sin(theta)};
}

int BigComplex::digits() const
{
    return static_cast<int>((prec() - 4) * 0.30102999566398120);
}

BigComplex& BigComplex::operator+=(const BigComplex& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o)
{
    Real r = re_ * o.re_ - im_ * o.im_;
    Real i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

BigComplex& BigComplex::operator*=(const Real& o)
{
    re_ *= o;
    im_ *= o;
    return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o)
{
    Real den = o.re_ * o.re_ + o.im_ * o.im_;
    if (den.is_zero())
        throw std::domain_error("complex division by zero");
    Real r = (re_ * o.re_ + im_ * o.im_) / den;
    Real i = (im_ * o.re_ - re_ * o.im_) / den;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

std::string BigComplex::to_string(int digits) const
{
    if (im_.is_zero())
        return re_.to_string(digits);
    std::string i = im_.to_string(digits);
    if (i[0] == '-')
        return re_.to_string(digits) + " - " + i.substr(1) + "*I";
    return re_.to_string(digits) + " + " + i + "*I";
}

BigComplex conj(const BigComplex& z)
{
    return {z.re(), -z.im()};
}

Real abs(const BigComplex& z)
{
    return hypot(z.re(), z.im());
}

Real arg(const BigComplex& z)
{
    return atan2(z.im(), z.re());
}

BigComplex exp(const BigComplex& z)
{
    return BigComplex::polar(exp(z.re()), z.im());
}

BigComplex log(const BigComplex& z)
{
    if (z.is_zero())
        throw std::domain_error("log of zero");
    return {log(abs(z)), arg(z)};
}

BigComplex sin(const BigComplex& z)
{
    // sin(x+iy) = sin x cosh y + i cos x sinh y
    Real ey = exp(z.im());
    Real eny = Real(1, ey.prec()) / ey;
    Real ch = ldexp(ey + eny, -1);
    Real sh = ldexp(ey - eny, -1);
    return {sin(z.re()) * ch, cos(z.re()) * sh};
}

BigComplex pow(const BigComplex& z, long n)
{
    if (n < 0)
        return BigComplex(1, z.prec()) / pow(z, -n);
    BigComplex result(1, z.prec()), base = z;
    while (n > 0) {
        if (n & 1)
            result *= base;
        n >>= 1;
        if (n)
            base *= base;
    }
    return result;
}

BigComplex pow(const BigComplex& z, const BigComplex& w)
{
    return exp(w * log(z));
}

Real relative_error(const BigComplex& a, const BigComplex& b)
{
    Real d = abs(a - b);
    Real s = abs(b);
    if (s.is_zero())
        return d.with_prec(64);
    return (d / s).with_prec(64);
}

BigComplex embed(const CycloNumber& x, Bits prec)
{
    unsigned long n = x.conductor();
    const auto& c = x.raw();
    BigComplex out(prec);
    if (x.is_rational()) {
        out.re() = Real(Rational(c[0]), prec);
        return out;
    }
    Real two_pi_over_n = ldexp(const_pi(prec), 1) / Real(static_cast<long>(n), prec);
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0)
            continue;
        Real t = two_pi_over_n * Real(static_cast<long>(j), prec);
        Real q(Rational(c[j]), prec);
        out.re() += q * cos(t);
        out.im() += q * sin(t);
    }
    return out;
}

}  // namespace hyperasym
