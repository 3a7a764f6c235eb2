#pragma once

#include "hyperasym/hring/element.hpp"

#include <vector>

namespace hyperasym {

// Canonical constructors; every result is in normal form.
HElement h_euler_gamma();
HElement h_pi();
HElement h_inv_pi();
HElement h_gamma(const Rational& r);
HElement h_psi(const Rational& r);
HElement h_hurwitz(long s, const Rational& r);
HElement h_log(const Rational& r);
HElement h_polylog(long s, const CycloNumber& alpha);

// (1/pi) sin(pi r) Gamma(1 - r), and 1 at r = 1.
HElement h_invert_gamma(const Rational& r);
// 1/Gamma(r) for any rational r; zero at the poles.
HElement h_reciprocal_gamma(const Rational& r);
// Gamma^{(s)}(r) = Gamma(r) P_s(Psi(r), zeta(2,r), ..., zeta(s,r)).
HElement h_gamma_derivative(unsigned s, const Rational& r);
// Taylor coefficients of Gamma(c + e) through e^{order-1}.
std::vector<HElement> h_gamma_series(const Rational& c, std::size_t order);
// Taylor coefficients of 1/Gamma(c + e) through e^{order-1}; c may be a pole.
std::vector<HElement> h_reciprocal_gamma_series(const Rational& c, std::size_t order);

HElement h_normalize(const HElement& x);

}  // namespace hyperasym
