#include "hyperasym/hring/atom.hpp"

#include <stdexcept>

namespace hyperasym {

namespace {

bool is_prime(const Integer& n)
{
    return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

}  // namespace

HAtom HAtom::gamma(const Rational& r)
{
    if (r.is_nonpositive_integer())
        throw std::domain_error("Gamma(" + r.str() + ") is a pole");
    return {AtomKind::Gamma, r, 0, {}};
}

HAtom HAtom::psi(const Rational& r)
{
    if (r.is_nonpositive_integer())
        throw std::domain_error("Psi(" + r.str() + ") is a pole");
    return {AtomKind::Psi, r, 0, {}};
}

HAtom HAtom::hurwitz(long s, const Rational& r)
{
    if (s < 2)
        throw std::domain_error("HurwitzZeta needs s >= 2");
    if (r.is_nonpositive_integer())
        throw std::domain_error("HurwitzZeta(s, " + r.str() + ") is undefined");
    return {AtomKind::HurwitzZeta, r, s, {}};
}

HAtom HAtom::log(const Rational& r)
{
    if (r.sign() <= 0)
        throw std::domain_error("Log needs a positive rational");
    return {AtomKind::LogPrime, r, 0, {}};
}

HAtom HAtom::polylog(long s, const CycloNumber& alpha)
{
    if (s < 1)
        throw std::domain_error("Li_s needs s >= 1");
    return {AtomKind::Polylog, {}, s, alpha.minimized()};
}

bool HAtom::is_canonical() const
{
    switch (kind) {
    case AtomKind::EulerGamma:
    case AtomKind::Pi:
    case AtomKind::InvPi:
        return true;
    case AtomKind::Gamma:
    case AtomKind::Psi:
        return r.sign() > 0 && r < Rational(1);
    case AtomKind::HurwitzZeta:
        return s >= 2 && r.sign() > 0 && r <= Rational(1);
    case AtomKind::LogPrime:
        return r.is_integer() && is_prime(r.num());
    case AtomKind::Polylog:
        return !alpha.is_zero() && !alpha.root_of_unity_angle().has_value();
    }
    return false;
}

const char* atom_kind_name(AtomKind k)
{
    switch (k) {
    case AtomKind::EulerGamma: return "EulerGamma";
    case AtomKind::Pi: return "Pi";
    case AtomKind::InvPi: return "InvPi";
    case AtomKind::Gamma: return "Gamma";
    case AtomKind::Psi: return "Psi";
    case AtomKind::HurwitzZeta: return "HurwitzZeta";
    case AtomKind::LogPrime: return "LogPrime";
    case AtomKind::Polylog: return "Polylog";
    }
    return "?";
}

std::string HAtom::str() const
{
    switch (kind) {
    case AtomKind::EulerGamma:
    case AtomKind::Pi:
    case AtomKind::InvPi:
        return atom_kind_name(kind);
    case AtomKind::Gamma:
    case AtomKind::Psi:
        return std::string(atom_kind_name(kind)) + "(" + r.str() + ")";
    case AtomKind::HurwitzZeta:
        return "HurwitzZeta(" + std::to_string(s) + ", " + r.str() + ")";
    case AtomKind::LogPrime:
        return "Log(" + r.str() + ")";
    case AtomKind::Polylog:
        return "Li(" + std::to_string(s) + ", " + alpha.str() + ")";
    }
    return "?";
}

int HAtom::compare(const HAtom& a, const HAtom& b)
{
    if (a.kind != b.kind)
        return a.kind < b.kind ? -1 : 1;
    if (a.s != b.s)
        return a.s < b.s ? -1 : 1;
    if (a.r != b.r)
        return a.r < b.r ? -1 : 1;
    if (a.kind == AtomKind::Polylog) {
        if (structural_less(a.alpha, b.alpha))
            return -1;
        if (structural_less(b.alpha, a.alpha))
            return 1;
    }
    return 0;
}

}  // namespace hyperasym
