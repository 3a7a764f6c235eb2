#include "hyperasym/expansion/expansion.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperasym {

const char* branch_name(Branch b)
{
    return b == Branch::Upper ? "upper" : "lower";
}

Branch parse_branch(const std::string& s)
{
    if (s == "upper")
        return Branch::Upper;
    if (s == "lower")
        return Branch::Lower;
    throw std::invalid_argument("branch must be 'upper' or 'lower'");
}

void AsymptoticExpansion::add(int rho, const LogSeries& s)
{
    auto& list = parts[rho];
    for (auto& x : list) {
        if (x.alpha() == s.alpha()) {
            x += s;
            return;
        }
    }
    list.push_back(s);
    std::sort(list.begin(), list.end(), [](const LogSeries& l, const LogSeries& r) { return l.alpha() < r.alpha(); });
}

void AsymptoticExpansion::canonicalize()
{
    for (auto it = parts.begin(); it != parts.end();) {
        auto& list = it->second;
        for (auto& s : list)
            s.trim();
        list.erase(std::remove_if(list.begin(), list.end(), [](const LogSeries& s) { return s.is_zero(); }), list.end());
        if (list.empty())
            it = parts.erase(it);
        else
            ++it;
    }
}

bool AsymptoticExpansion::has_log_term() const
{
    for (const auto& [rho, list] : parts)
        for (const auto& s : list)
            for (std::size_t i = 1; i < s.log_count(); ++i)
                for (std::size_t n = 0; n < s.depth(); ++n)
                    if (!s.coeff(i, n).is_zero())
                        return true;
    return false;
}

bool operator==(const AsymptoticExpansion& a, const AsymptoticExpansion& b)
{
    return a.domain == b.domain && a.branch == b.branch && a.lambda == b.lambda && a.prefactor == b.prefactor &&
           a.depth == b.depth && a.parts == b.parts;
}

AsymptoticExpansion absorb_prefactor(const AsymptoticExpansion& e)
{
    AsymptoticExpansion out = e;
    out.prefactor = HElement(1);
    for (auto& [rho, list] : out.parts)
        for (auto& s : list)
            s *= e.prefactor;
    out.canonicalize();
    return out;
}

std::vector<HElement> hadamard_star(const std::vector<HElement>& f, const std::vector<HElement>& g)
{
    if (f.size() != g.size())
        throw std::invalid_argument("hadamard_star: depth mismatch");
    std::vector<HElement> out(f.size());
    for (std::size_t n = 0; n < f.size(); ++n)
        out[n] = f[n] * g[n];
    return out;
}

}  // namespace hyperasym
