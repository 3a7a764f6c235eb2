#include "hyperasym/exact/params.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hyperasym {

std::vector<ParamGroup> group_parameters(const std::vector<Rational>& a)
{
    for (const auto& x : a)
        if (x.is_nonpositive_integer())
            throw std::invalid_argument("parameter " + x.str() + " is a non-positive integer");
    std::vector<Rational> sorted = a;
    std::sort(sorted.begin(), sorted.end());
    std::vector<ParamGroup> groups;
    for (const auto& x : sorted) {
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const ParamGroup& g) { return (x - g.representative).is_integer(); });
        if (it == groups.end()) {
            groups.push_back({x, {0}});
        } else {
            it->offsets.push_back((x - it->representative).num().get_ui());
        }
    }
    std::sort(groups.begin(), groups.end(),
              [](const ParamGroup& l, const ParamGroup& r) { return l.representative < r.representative; });
    return groups;
}

void HyperParams::validate() const
{
    for (const auto& x : b)
        if (x.is_nonpositive_integer())
            throw std::invalid_argument("denominator parameter " + x.str() + " is a non-positive integer");
}

bool HyperParams::is_polynomial() const
{
    return std::any_of(a.begin(), a.end(), [](const Rational& x) { return x.is_nonpositive_integer(); });
}

std::string HyperParams::str() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < a.size(); ++i)
        out += (i ? "," : "") + a[i].str();
    out += ";";
    for (std::size_t i = 0; i < b.size(); ++i)
        out += (i ? "," : "") + b[i].str();
    return out + "]";
}

Rational nu(const HyperParams& params)
{
    if (params.p() != params.q())
        throw std::invalid_argument("nu is defined for p = q");
    Rational s;
    for (const auto& x : params.a)
        s += x;
    for (const auto& x : params.b)
        s -= x;
    return s;
}

namespace {

bool is_nonpositive_integer(const CycloNumber& x)
{
    return x.is_rational() && x.to_rational().is_nonpositive_integer();
}

bool difference_is_natural(const CycloNumber& a, const CycloNumber& b)
{
    CycloNumber d = a - b;
    if (!d.is_rational())
        return false;
    Rational r = d.to_rational();
    return r.is_integer() && r.sign() > 0;
}

}  // namespace

GalochkinVerdict galochkin_classify(const std::vector<CycloNumber>& a, const std::vector<CycloNumber>& b)
{
    if (b.size() < a.size())
        throw std::invalid_argument("Galochkin criterion needs q >= p");
    for (const auto& x : a)
        if (is_nonpositive_integer(x))
            throw std::invalid_argument("parameter " + x.str() + " is a non-positive integer");
    for (const auto& x : b)
        if (is_nonpositive_integer(x))
            throw std::invalid_argument("parameter " + x.str() + " is a non-positive integer");
    for (const auto& x : a)
        for (const auto& y : b)
            if (x == y)
                throw std::invalid_argument("a_i = b_j = " + x.str());

    std::vector<std::size_t> ia, ib;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_rational())
            ia.push_back(i);
    for (std::size_t j = 0; j < b.size(); ++j)
        if (!b[j].is_rational())
            ib.push_back(j);

    GalochkinVerdict v;
    if (ia.size() != ib.size()) {
        v.reason = "non-rational parameters cannot be paired (" + std::to_string(ia.size()) + " upper, " +
                   std::to_string(ib.size()) + " lower)";
        return v;
    }
    // Kuhn's augmenting paths on the compatibility graph.
    std::vector<long> match_b(ib.size(), -1);
    for (std::size_t u = 0; u < ia.size(); ++u) {
        std::vector<bool> seen(ib.size(), false);
        std::function<bool(std::size_t)> augment = [&](std::size_t x) {
            for (std::size_t y = 0; y < ib.size(); ++y) {
                if (seen[y] || !difference_is_natural(a[ia[x]], b[ib[y]]))
                    continue;
                seen[y] = true;
                if (match_b[y] < 0 || augment(static_cast<std::size_t>(match_b[y]))) {
                    match_b[y] = static_cast<long>(x);
                    return true;
                }
            }
            return false;
        };
        if (!augment(u)) {
            v.reason = "upper parameter " + a[ia[u]].str() + " has no lower partner at a positive integer distance";
            return v;
        }
    }
    v.is_E_function = true;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t y = 0; y < ib.size(); ++y)
        pairs.emplace_back(ia[static_cast<std::size_t>(match_b[y])], ib[y]);
    std::sort(pairs.begin(), pairs.end());
    for (auto [i, j] : pairs)
        v.pairing.emplace_back(a[i], b[j]);
    v.reason = pairs.empty() ? "all parameters rational" : "non-rational parameters paired";
    return v;
}

}  // namespace hyperasym
