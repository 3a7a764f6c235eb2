#pragma once

#include "hyperasym/exact/cyclo.hpp"

#include <string>

namespace hyperasym {

enum class AtomKind { EulerGamma, Pi, InvPi, Gamma, Psi, HurwitzZeta, LogPrime, Polylog };

// Generator of H. Atoms built by the factories are canonical:
//   Gamma(r), 0<r<1;  Psi(r), 0<r<1;  HurwitzZeta(s, r), s>=2, 0<r<=1;
//   LogPrime(p), p prime;  Polylog(s, alpha), alpha not a root of unity.
// Raw atoms (any argument) come from parsing and JSON and are rewritten by
// h_normalize.
struct HAtom {
    AtomKind kind = AtomKind::Pi;
    Rational r;          // Gamma, Psi, HurwitzZeta, LogPrime
    long s = 0;          // HurwitzZeta, Polylog
    CycloNumber alpha;   // Polylog, kept minimized

    static HAtom euler_gamma() { return {AtomKind::EulerGamma, {}, 0, {}}; }
    static HAtom pi() { return {AtomKind::Pi, {}, 0, {}}; }
    static HAtom inv_pi() { return {AtomKind::InvPi, {}, 0, {}}; }
    static HAtom gamma(const Rational& r);
    static HAtom psi(const Rational& r);
    static HAtom hurwitz(long s, const Rational& r);
    static HAtom log(const Rational& r);
    static HAtom polylog(long s, const CycloNumber& alpha);

    bool is_canonical() const;
    std::string str() const;
    friend bool operator==(const HAtom& a, const HAtom& b) { return compare(a, b) == 0; }
    friend bool operator<(const HAtom& a, const HAtom& b) { return compare(a, b) < 0; }
    static int compare(const HAtom& a, const HAtom& b);
};

const char* atom_kind_name(AtomKind k);

}  // namespace hyperasym
