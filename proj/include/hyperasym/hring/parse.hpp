#pragma once

#include "hyperasym/hring/element.hpp"

#include <stdexcept>
#include <string_view>

namespace hyperasym {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Expression syntax: + - * / ^ and parentheses over integers, cyclotomic
// literals cyclo(N)[...], I, Pi, InvPi, EulerGamma, Gamma(r), Psi(r),
// HurwitzZeta(s, r), Zeta(s), Log(r), Li(s, z). Atoms are kept raw; apply
// h_normalize for the canonical form. Division is allowed by scalars and by
// monomials in Pi, InvPi and Gamma.
HElement parse_helement(std::string_view text);

}  // namespace hyperasym
