#include "hyperasym/hring/json.hpp"

#include <stdexcept>

namespace hyperasym {

Json atom_to_json(const HAtom& a)
{
    Json j;
    j["kind"] = atom_kind_name(a.kind);
    switch (a.kind) {
    case AtomKind::Gamma:
    case AtomKind::Psi:
        j["r"] = a.r.str();
        break;
    case AtomKind::HurwitzZeta:
        j["s"] = a.s;
        j["r"] = a.r.str();
        break;
    case AtomKind::LogPrime:
        j["p"] = a.r.str();
        break;
    case AtomKind::Polylog:
        j["s"] = a.s;
        j["alpha"] = a.alpha.str();
        break;
    default:
        break;
    }
    return j;
}

HAtom atom_from_json(const Json& j)
{
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "EulerGamma")
        return HAtom::euler_gamma();
    if (kind == "Pi")
        return HAtom::pi();
    if (kind == "InvPi")
        return HAtom::inv_pi();
    if (kind == "Gamma")
        return HAtom::gamma(Rational::parse(j.at("r").get<std::string>()));
    if (kind == "Psi")
        return HAtom::psi(Rational::parse(j.at("r").get<std::string>()));
    if (kind == "HurwitzZeta")
        return HAtom::hurwitz(j.at("s").get<long>(), Rational::parse(j.at("r").get<std::string>()));
    if (kind == "LogPrime")
        return HAtom::log(Rational::parse(j.at("p").get<std::string>()));
    if (kind == "Polylog")
        return HAtom::polylog(j.at("s").get<long>(), CycloNumber::parse(j.at("alpha").get<std::string>()));
    throw std::invalid_argument("unknown atom kind '" + kind + "'");
}

Json to_json(const HElement& x)
{
    Json terms = Json::array();
    for (const auto& [m, c] : x.terms()) {
        Json mono = Json::array();
        for (const auto& [a, e] : m)
            for (unsigned k = 0; k < e; ++k)
                mono.push_back(atom_to_json(a));
        Json t;
        t["monomial"] = mono;
        t["coeff"] = c.str();
        terms.push_back(t);
    }
    Json j;
    j["terms"] = terms;
    return j;
}

HElement helement_from_json(const Json& j)
{
    HElement out;
    for (const auto& t : j.at("terms")) {
        Monomial m;
        for (const auto& a : t.at("monomial"))
            m.push_back({atom_from_json(a), 1});
        out += HElement::monomial(m, CycloNumber::parse(t.at("coeff").get<std::string>()));
    }
    return out;
}

}  // namespace hyperasym
