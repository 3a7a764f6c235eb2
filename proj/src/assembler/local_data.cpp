#include "hyperasym/assembler/local_data.hpp"

#include "hyperasym/hring/eval.hpp"
#include "hyperasym/hring/factory.hpp"
#include "hyperasym/numerics/hypergeom.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperasym {

Json to_json(const LocalData& d)
{
    Json blocks = Json::array();
    for (const auto& b : d.blocks) {
        Json series = Json::array();
        for (const auto& g : b.series) {
            Json s = Json::array();
            for (const auto& c : g)
                s.push_back(to_json(c));
            series.push_back(std::move(s));
        }
        Json consts = Json::array();
        for (const auto& c : b.constants)
            consts.push_back(to_json(c));
        blocks.push_back({{"t", b.t.str()}, {"series", std::move(series)}, {"constants", std::move(consts)}});
    }
    return {{"rho", std::to_string(d.rho)}, {"blocks", std::move(blocks)}};
}

LocalData local_data_from_json(const Json& j)
{
    LocalData d;
    d.rho = std::stoi(j.at("rho").get<std::string>());
    if (d.rho != 0 && d.rho != 1)
        throw std::invalid_argument("rho must be 0 or 1");
    for (const auto& jb : j.at("blocks")) {
        LocalBlock b;
        b.t = Rational::parse(jb.at("t").get<std::string>());
        for (const auto& js : jb.at("series")) {
            std::vector<HElement> g;
            for (const auto& c : js)
                g.push_back(helement_from_json(c));
            b.series.push_back(std::move(g));
        }
        for (const auto& c : jb.at("constants"))
            b.constants.push_back(helement_from_json(c));
        if (b.series.size() != b.constants.size())
            throw std::invalid_argument("local data: one series per constant expected");
        d.blocks.push_back(std::move(b));
    }
    return d;
}

Json to_json(const LocalDataSet& s)
{
    Json arr = Json::array();
    for (const auto& [rho, d] : s)
        arr.push_back(to_json(d));
    return arr;
}

LocalDataSet local_data_set_from_json(const Json& j)
{
    LocalDataSet s;
    for (const auto& e : j) {
        LocalData d = local_data_from_json(e);
        s[d.rho] = std::move(d);
    }
    return s;
}

LocalDataSet kummer_local_data(const Rational& a, const Rational& b, Branch branch, std::size_t N)
{
    if (a.is_integer() || (b - a).is_integer())
        throw std::invalid_argument("kummer_local_data: a and b - a must not be integers");
    LocalDataSet out;
    // rho = 0: t = a - 1, g = (1 - s)^{b-a-1}
    {
        LocalBlock blk;
        blk.t = a - Rational(1);
        std::vector<HElement> g;
        Rational c(1);
        for (std::size_t n = 0; n < N; ++n) {
            if (n > 0)
                c *= (a + Rational(1) - b + Rational(static_cast<long>(n - 1))) / Rational(static_cast<long>(n));
            g.emplace_back(c);
        }
        blk.series.push_back(std::move(g));
        Rational sigma(branch == Branch::Upper ? 1 : -1);
        HElement w = h_gamma(b) * h_gamma(Rational(1) - a) * h_reciprocal_gamma(b - a);
        blk.constants.push_back(w * CycloNumber::exp_i_pi(sigma * a));
        out[0] = LocalData{0, {std::move(blk)}};
    }
    // rho = 1: t = b - a - 1, g = (1 + s)^{a-1}
    {
        LocalBlock blk;
        blk.t = b - a - Rational(1);
        std::vector<HElement> g;
        Rational c(1);
        for (std::size_t n = 0; n < N; ++n) {
            if (n > 0)
                c *= (a - Rational(static_cast<long>(n))) / Rational(static_cast<long>(n));
            g.emplace_back(c);
        }
        blk.series.push_back(std::move(g));
        blk.constants.push_back(h_gamma(b) * h_gamma(a + Rational(1) - b) * h_reciprocal_gamma(a));
        out[1] = LocalData{1, {std::move(blk)}};
    }
    return out;
}

namespace {

// s^t with arg s fixed by the caller
BigComplex power_with_arg(const Real& mod, const Real& argv, const Rational& t)
{
    Bits p = mod.prec();
    Real tr(t, p);
    return BigComplex::polar(exp(tr * log(mod)), tr * argv);
}

}  // namespace

double validate_kummer_local_data(const Rational& a, const Rational& b, Branch branch, const LocalDataSet& d, int P)
{
    const Bits wb = digits_to_bits(P + kGuardDigits);
    const LocalBlock& b0 = d.at(0).blocks.at(0);
    const LocalBlock& b1 = d.at(1).blocks.at(0);
    // Stored series must be the exact binomial expansions; the constants are
    // checked numerically with the closed forms of those series.
    LocalDataSet ref = kummer_local_data(a, b, branch, b0.series.at(0).size());
    if (!(ref.at(0).blocks[0].series == b0.series) || !(ref.at(1).blocks[0].series == b1.series) ||
        b0.t != ref.at(0).blocks[0].t || b1.t != ref.at(1).blocks[0].t)
        return 1.0;
    double worst = 0;
    {
        // z = -1/2; g via Pfaff: (1/z)(1-u)^{-1} 2F1[b-a, 1; b; u/(u-1)], u = 1/z
        Rational z(-1, 2), u = Rational(1) / z;
        BigComplex lhs = n_pFq({b - a, Rational(1)}, {b}, BigComplex(u / (u - Rational(1)), wb), P + 5);
        lhs *= Real(Rational(1) / (z * (Rational(1) - u)), wb);
        Real pi = const_pi(wb);
        Real argz = branch == Branch::Upper ? -pi : pi;
        BigComplex rhs = h_eval(b0.constants[0], P + 5).with_prec(wb) *
                         power_with_arg(Real(-z, wb), argz, b0.t) *
                         BigComplex(pow(Real(Rational(1) - z, wb), Real(b - a - Rational(1), wb)));
        HElement B1 = h_gamma(b) * h_gamma(a - Rational(1)) * h_reciprocal_gamma(a) * h_reciprocal_gamma(b - Rational(1));
        rhs -= h_eval(B1, P + 5).with_prec(wb) *
               n_pFq({Rational(1), Rational(2) - b}, {Rational(2) - a}, BigComplex(z, wb), P + 5);
        worst = std::max(worst, relative_error(rhs, lhs).to_double());
    }
    {
        // z = 13/10
        Rational z(13, 10), u = Rational(1) / z, s = z - Rational(1);
        BigComplex lhs = n_pFq({a, Rational(1)}, {b}, BigComplex(u, wb), P + 5) * Real(u, wb);
        HElement A = h_gamma(b) * h_gamma(b - a - Rational(1)) * h_reciprocal_gamma(b - a) * h_reciprocal_gamma(b - Rational(1));
        BigComplex rhs = h_eval(A, P + 5).with_prec(wb) *
                         n_pFq({a, Rational(1)}, {a - b + Rational(2)}, BigComplex(Rational(1) - u, wb), P + 5) *
                         Real(u, wb);
        rhs += h_eval(b1.constants[0], P + 5).with_prec(wb) * power_with_arg(Real(s, wb), Real(0, wb), b1.t) *
               BigComplex(pow(Real(z, wb), Real(a - Rational(1), wb)));
        worst = std::max(worst, relative_error(rhs, lhs).to_double());
    }
    return worst;
}

}  // namespace hyperasym
