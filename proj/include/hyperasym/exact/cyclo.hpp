#pragma once

#include "hyperasym/exact/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hyperasym {

unsigned long euler_phi(unsigned long n);
// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(unsigned long n);

// Element of Q(zeta_N), zeta_N = exp(2 pi i / N), stored in the power basis
// modulo Phi_N. Values of different conductors are lifted to the lcm.
class CycloNumber {
public:
    CycloNumber() : c_(1) {}
    CycloNumber(const Rational& r) : c_{r.get()} {}
    template <std::integral T>
    CycloNumber(T v) : c_{mpq_class(static_cast<long>(v))} {}

    static CycloNumber root_of_unity(unsigned long n, long k);
    static CycloNumber exp_2pi_i(const Rational& r);  // e^{2 pi i r}
    static CycloNumber exp_i_pi(const Rational& r);   // e^{i pi r}
    static CycloNumber sin_pi(const Rational& r);
    static CycloNumber cos_pi(const Rational& r);
    static CycloNumber imag_unit();
    static CycloNumber sqrt2();
    static CycloNumber from_coeffs(unsigned long n, const std::vector<Rational>& coeffs);

    // "cyclo(N)[c0,c1,...]" or a plain rational.
    static CycloNumber parse(std::string_view text);
    std::string str() const;  // canonical literal at minimal conductor

    unsigned long conductor() const { return n_; }
    std::vector<Rational> coeffs() const;

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rational to_rational() const;

    CycloNumber lifted(unsigned long m) const;
    CycloNumber minimized() const;
    CycloNumber inverse() const;
    CycloNumber conj() const;
    // r in [0,1) with *this == e^{2 pi i r}, if this is a root of unity.
    std::optional<Rational> root_of_unity_angle() const;

    CycloNumber& operator+=(const CycloNumber& o);
    CycloNumber& operator-=(const CycloNumber& o);
    CycloNumber& operator*=(const CycloNumber& o);
    CycloNumber& operator/=(const CycloNumber& o) { return *this *= o.inverse(); }
    CycloNumber& operator*=(const Rational& r);

    friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
    friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
    friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
    friend CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a /= b; }
    CycloNumber operator-() const;

    friend bool operator==(const CycloNumber& a, const CycloNumber& b);

    // Structural order on (conductor, coefficients); meaningful on minimized values.
    friend bool structural_less(const CycloNumber& a, const CycloNumber& b);

    const std::vector<mpq_class>& raw() const { return c_; }

private:
    CycloNumber(unsigned long n, std::vector<mpq_class> c) : n_(n), c_(std::move(c)) {}
    static std::vector<mpq_class> reduce(std::vector<mpq_class> poly, unsigned long n);

    unsigned long n_ = 1;
    std::vector<mpq_class> c_;
};

CycloNumber pow(const CycloNumber& x, long e);

}  // namespace hyperasym
