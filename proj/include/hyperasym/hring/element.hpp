#pragma once

#include "hyperasym/hring/atom.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hyperasym {

// Sorted (atom, exponent) list; exponents are positive.
using Monomial = std::vector<std::pair<HAtom, unsigned>>;

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Finite CycloNumber-linear combination of monomials in the atoms. Products
// apply two local monomial rules: Pi * InvPi -> 1 and, for canonical Gamma
// atoms, Gamma(r) Gamma(1-r) -> Pi / sin(pi r).
class HElement {
public:
    using Terms = std::map<Monomial, CycloNumber, MonomialLess>;

    HElement() = default;
    HElement(const CycloNumber& c);
    HElement(const Rational& r) : HElement(CycloNumber(r)) {}
    template <std::integral T>
    HElement(T v) : HElement(CycloNumber(v)) {}
    static HElement atom(const HAtom& a, unsigned e = 1);
    static HElement monomial(const Monomial& m, const CycloNumber& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::optional<CycloNumber> as_scalar() const;
    std::size_t size() const { return terms_.size(); }

    HElement& operator+=(const HElement& o);
    HElement& operator-=(const HElement& o);
    HElement& operator*=(const HElement& o);
    HElement& operator*=(const CycloNumber& c);
    HElement& operator*=(const Rational& r) { return *this *= CycloNumber(r); }
    friend HElement operator+(HElement a, const HElement& b) { return a += b; }
    friend HElement operator-(HElement a, const HElement& b) { return a -= b; }
    friend HElement operator*(const HElement& a, const HElement& b);
    friend HElement operator*(HElement a, const CycloNumber& c) { return a *= c; }
    HElement operator-() const;
    friend bool operator==(const HElement& a, const HElement& b);

    // Human-readable form, parseable by parse_helement.
    std::string str() const;

private:
    void add_term(const Monomial& m, const CycloNumber& c);
    Terms terms_;
};

HElement pow(const HElement& x, unsigned e);
std::string monomial_str(const Monomial& m);

}  // namespace hyperasym
