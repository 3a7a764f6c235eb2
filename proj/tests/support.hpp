#pragma once

#include "hyperasym/expansion/expansion.hpp"
#include "hyperasym/hring/factory.hpp"
#include "hyperasym/numerics/complex.hpp"

#include <fstream>
#include <random>
#include <json.hpp>
#include <string>

namespace test {

using namespace hyperasym;

inline Real real_from(const std::string& s, int digits = 60)
{
    Real r(digits_to_bits(digits));
    mpfr_set_str(r.ptr(), s.c_str(), 10, MPFR_RNDN);
    return r;
}

inline BigComplex complex_from(const std::string& re, const std::string& im = "0", int digits = 60)
{
    return {real_from(re, digits), real_from(im, digits)};
}

inline double rel(const BigComplex& a, const BigComplex& b) { return relative_error(a, b).to_double(); }

inline double rel(const Real& a, const Real& b) { return rel(BigComplex(a), BigComplex(b)); }

// Same exponent classes, same coefficients after normalization, depths < N.
inline bool same_expansion(const AsymptoticExpansion& x, const AsymptoticExpansion& y, std::size_t N,
                           std::string* why = nullptr)
{
    auto fail = [&](const std::string& m) {
        if (why)
            *why = m;
        return false;
    };
    AsymptoticExpansion a = absorb_prefactor(x), b = absorb_prefactor(y);
    for (auto* e : {&a, &b})
        for (auto it = e->parts.begin(); it != e->parts.end();)
            it = it->second.empty() ? e->parts.erase(it) : std::next(it);
    if (a.parts.size() != b.parts.size())
        return fail("different rho sets");
    for (const auto& [rho, la] : a.parts) {
        auto jt = b.parts.find(rho);
        if (jt == b.parts.end() || jt->second.size() != la.size())
            return fail("rho " + std::to_string(rho) + ": different classes");
        for (std::size_t j = 0; j < la.size(); ++j) {
            const LogSeries &s = la[j], &t = jt->second[j];
            if (!(s.alpha() == t.alpha()))
                return fail("alpha " + s.alpha().str() + " vs " + t.alpha().str());
            std::size_t L = std::max(s.log_count(), t.log_count());
            for (std::size_t i = 0; i < L; ++i)
                for (std::size_t n = 0; n < N; ++n) {
                    HElement u = i < s.log_count() ? h_normalize(s.coeff(i, n)) : HElement();
                    HElement v = i < t.log_count() ? h_normalize(t.coeff(i, n)) : HElement();
                    if (!(u == v))
                        return fail("rho " + std::to_string(rho) + " alpha " + s.alpha().str() + " log " +
                                    std::to_string(i) + " n " + std::to_string(n) + ": " + u.str() + " vs " +
                                    v.str());
                }
        }
    }
    return true;
}

// Random sums of products of raw atoms, in parser syntax.
inline std::string rat(std::mt19937& rng, long max_num, long max_den)
{
    long d = static_cast<long>(rng() % max_den) + 1;
    long n = static_cast<long>(rng() % (max_num * d)) + 1;
    return Rational(n, d).str();
}

inline std::string random_atom(std::mt19937& rng)
{
    switch (rng() % 9) {
    case 0: return "Gamma(" + rat(rng, 4, 12) + ")";
    case 1: return "Psi(" + rat(rng, 3, 8) + ")";
    case 2: return "HurwitzZeta(" + std::to_string(2 + rng() % 3) + ", " + rat(rng, 3, 6) + ")";
    case 3: return "Log(" + rat(rng, 20, 9) + ")";
    case 4: {
        unsigned long q = 2 + rng() % 5;
        CycloNumber z = CycloNumber::root_of_unity(q, 1 + static_cast<long>(rng() % (q - 1)));
        return "Li(" + std::to_string(1 + rng() % 3) + ", " + z.str() + ")";
    }
    case 5: return "Pi";
    case 6: return "InvPi";
    case 7: return "EulerGamma";
    default: return "Gamma(" + rat(rng, 1, 12) + ")";
    }
}

inline std::string random_expression(std::mt19937& rng)
{
    std::string s;
    unsigned terms = 1 + rng() % 4;
    for (unsigned t = 0; t < terms; ++t) {
        if (t > 0)
            s += rng() % 2 ? " + " : " - ";
        s += rat(rng, 5, 7);
        unsigned atoms = 1 + rng() % 3;
        for (unsigned a = 0; a < atoms; ++a)
            s += "*" + random_atom(rng);
    }
    return s;
}


inline nlohmann::ordered_json load_fixture(const std::string& name)
{
    std::ifstream f(std::string(HYPERASYM_FIXTURE_DIR) + "/" + name);
    return nlohmann::ordered_json::parse(f);
}

}  // namespace test
