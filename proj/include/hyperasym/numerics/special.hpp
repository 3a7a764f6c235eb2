#pragma once

#include "hyperasym/numerics/complex.hpp"

#include <stdexcept>

namespace hyperasym {

// Raised when an evaluation cannot certify its error bound.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Guard digits added on top of the requested precision.
inline constexpr int kGuardDigits = 15;

// All functions below return values with relative error <= 10^{4-P}.
BigComplex n_gamma(const Rational& r, int P);
BigComplex n_gamma(const BigComplex& z, int P);
BigComplex n_hurwitz(long s, const Rational& a, int P);
BigComplex n_hurwitz(const Real& s, const Rational& a, int P);
BigComplex n_psi_k(unsigned long k, const Rational& r, int P);
// Harmonic-sum route with Euler-Maclaurin correction.
BigComplex n_euler_gamma(int P);
// Li_s(z), |z| <= 1: direct sum for |z| <= 1/2, otherwise the log-series
// expansion in mu = log z (|mu| < 2 pi).
BigComplex n_polylog(long s, const BigComplex& z, int P);
// Li_s(e^{2 pi i r}) through Hurwitz zeta values.
BigComplex n_polylog_unity(long s, const Rational& r, int P);
// Riemann zeta at an integer s != 1.
Real n_zeta_int(long s, int P);

}  // namespace hyperasym
