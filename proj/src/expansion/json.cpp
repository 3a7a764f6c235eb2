#include "hyperasym/expansion/json.hpp"

#include <map>
#include <stdexcept>

namespace hyperasym {

Json to_json(const AsymptoticExpansion& e)
{
    Json j;
    j["schema"] = kExpansionSchema;
    if (e.domain == "continuation") {
        j["domain"] = "continuation";
    } else {
        Json sector;
        sector["branch"] = branch_name(e.branch);
        j["sector"] = sector;
    }
    j["lambda"] = e.lambda.str();
    j["depth"] = e.depth;
    j["prefactor"] = to_json(e.prefactor);
    Json terms = Json::array();
    for (const auto& [rho, list] : e.parts)
        for (const auto& s : list)
            for (std::size_t i = 0; i < s.log_count(); ++i)
                for (std::size_t n = 0; n < s.depth(); ++n) {
                    const HElement& c = s.coeff(i, n);
                    if (c.is_zero())
                        continue;
                    Json t;
                    t["rho"] = std::to_string(rho);
                    t["alpha"] = s.alpha().str();
                    t["logpow"] = i;
                    t["n"] = n;
                    t["coeff"] = to_json(c);
                    terms.push_back(t);
                }
    j["terms"] = terms;
    return j;
}

AsymptoticExpansion expansion_from_json(const Json& j)
{
    AsymptoticExpansion e;
    if (j.contains("domain") && j.at("domain") == "continuation") {
        e.domain = "continuation";
    } else {
        e.branch = parse_branch(j.at("sector").at("branch").get<std::string>());
    }
    if (j.contains("lambda"))
        e.lambda = CycloNumber::parse(j.at("lambda").get<std::string>());
    e.depth = j.at("depth").get<std::size_t>();
    e.prefactor = helement_from_json(j.at("prefactor"));
    std::map<std::pair<int, Rational>, LogSeries> series;
    for (const auto& t : j.at("terms")) {
        int rho = std::stoi(t.at("rho").get<std::string>());
        Rational alpha = Rational::parse(t.at("alpha").get<std::string>());
        auto key = std::make_pair(rho, alpha);
        auto it = series.find(key);
        if (it == series.end())
            it = series.emplace(key, LogSeries(alpha, e.depth)).first;
        it->second.add(t.at("logpow").get<std::size_t>(), t.at("n").get<std::size_t>(), helement_from_json(t.at("coeff")));
    }
    for (auto& [key, s] : series)
        e.add(key.first, s);
    e.canonicalize();
    return e;
}

}  // namespace hyperasym
