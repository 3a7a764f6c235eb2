#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

namespace hyperasym {

using Integer = mpz_class;

// Reduced fraction with positive denominator.
class Rational {
public:
    Rational() = default;
    template <std::integral T>
    Rational(T v) : v_(static_cast<long>(v)) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& n, const Integer& d);
    explicit Rational(const mpq_class& q);

    // Accepts "p", "p/q", leading '+', '-' or U+2212.
    static Rational parse(std::string_view text);
    std::string str() const;

    const mpq_class& get() const { return v_; }
    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_nonpositive_integer() const { return is_integer() && sgn(v_) <= 0; }
    int sign() const { return sgn(v_); }
    long to_long() const;
    double to_double() const { return v_.get_d(); }

    Integer floor() const;
    Rational frac() const;  // in [0,1)
    Rational inverse() const;
    Rational abs() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class v_{0};
};

Rational pow(const Rational& base, long e);
Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

}  // namespace hyperasym
