#include "hyperasym/assembler/assembler.hpp"
#include "hyperasym/asymp/full.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hyperasym;

namespace {

LocalBlock block(const Rational& t, std::vector<std::vector<HElement>> g, std::vector<HElement> w)
{
    LocalBlock b;
    b.t = t;
    b.series = std::move(g);
    b.constants = std::move(w);
    return b;
}

std::vector<HElement> series_of(std::initializer_list<long> v)
{
    std::vector<HElement> out;
    for (long x : v)
        out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("y series facts")
{
    auto y = y_series(Rational(-1), 0, 8);
    CHECK(y[0] == Rational(1));
    for (long t = 0; t <= 2; ++t) {
        for (const auto& c : y_series(Rational(t), 0, 8))
            CHECK(c.is_zero());
        Rational expect = Rational(t % 2 == 0 ? -1 : 1) * Rational(factorial(static_cast<unsigned long>(t)));
        CHECK(y_series(Rational(t), 1, 4)[0] == expect);
    }
    // generic exponent: n-th coefficient Gamma(1 - {t}) / Gamma(-t - n)
    Rational t(-2, 3);
    auto g = y_series(t, 0, 4);
    CHECK(g[0] == Rational(1));
    for (std::size_t n = 1; n < 4; ++n)
        CHECK(g[n] == g[n - 1] * (-t - Rational(static_cast<long>(n))));
}

TEST_CASE("eta series")
{
    LocalBlock nat = block(Rational(2), {series_of({1, 2, 3, 4})}, {HElement(1)});
    for (const auto& c : eta_series(nat, 0, 4))
        CHECK(c.is_zero());
    LocalBlock m1 = block(Rational(-1), {series_of({1, 0, 0, 0})}, {HElement(1)});
    auto e = eta_series(m1, 0, 4);
    CHECK(e[0] == HElement(1));
    for (std::size_t n = 1; n < 4; ++n)
        CHECK(e[n].is_zero());
    // bilinear in g
    LocalBlock u = block(Rational(-1, 3), {series_of({1, 2, 0, 5}), series_of({3, 0, 1, 1})}, {});
    LocalBlock v = block(Rational(-1, 3), {series_of({0, 1, 7, 2}), series_of({1, 1, 1, 1})}, {});
    LocalBlock w = u;
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t n = 0; n < 4; ++n)
            w.series[k][n] = u.series[k][n] * CycloNumber(2) + v.series[k][n] * CycloNumber(-3);
    for (std::size_t k = 0; k < 2; ++k) {
        auto eu = eta_series(u, k, 4), ev = eta_series(v, k, 4), ew = eta_series(w, k, 4);
        for (std::size_t n = 0; n < 4; ++n)
            CHECK(ew[n] == eu[n] * CycloNumber(2) + ev[n] * CycloNumber(-3));
    }
}

TEST_CASE("single block toy")
{
    HElement xi = h_gamma(Rational(1, 3)) * h_pi();
    LocalDataSet d;
    d[1] = LocalData{1, {block(Rational(-1), {series_of({1, 0, 0, 0})}, {xi})}};
    AsymptoticExpansion e = absorb_prefactor(assemble_expansion(d, 4));
    REQUIRE(e.parts.at(1).size() == 1);
    const LogSeries& s = e.parts.at(1)[0];
    CHECK(s.alpha() == Rational(0));
    CHECK(h_normalize(s.coeff(0, 0)) == h_normalize(xi));
    for (std::size_t n = 1; n < 4; ++n)
        CHECK(s.coeff(0, n).is_zero());

    AsymptoticExpansion empty = assemble_expansion({}, 4);
    for (const auto& [rho, l] : empty.parts)
        CHECK(l.empty());
}

TEST_CASE("assembly is linear in the connection constants")
{
    LocalBlock b = block(Rational(-2, 3), {series_of({1, 1, 2, 3}), series_of({2, 0, 1, 0})},
                         {h_gamma(Rational(1, 4)), h_euler_gamma()});
    LocalDataSet one, two;
    one[0] = LocalData{0, {b}};
    LocalBlock b2 = b;
    for (auto& c : b2.constants)
        c *= CycloNumber(Rational(5, 2));
    two[0] = LocalData{0, {b2}};
    AsymptoticExpansion x = absorb_prefactor(assemble_expansion(one, 4)),
                        y = absorb_prefactor(assemble_expansion(two, 4));
    const LogSeries &s = x.parts.at(0)[0], &t = y.parts.at(0)[0];
    CHECK(s.log_count() == 2);
    for (std::size_t i = 0; i < s.log_count(); ++i)
        for (std::size_t n = 0; n < 4; ++n)
            CHECK(h_normalize(t.coeff(i, n)) == h_normalize(s.coeff(i, n) * CycloNumber(Rational(5, 2))));
}

TEST_CASE("Kummer fixture reproduces the engine")
{
    auto fx = test::load_fixture("kummer_1_3__5_7.json");
    Rational a = Rational::parse(fx["a"].get<std::string>()), b = Rational::parse(fx["b"].get<std::string>());
    for (Branch br : {Branch::Upper, Branch::Lower}) {
        LocalDataSet d = local_data_set_from_json(fx[branch_name(br)]["local_data"]);
        CHECK(to_json(d).dump() == fx[branch_name(br)]["local_data"].dump());
        CHECK(validate_kummer_local_data(a, b, br, d, 60) < 1e-50);
        std::string why;
        CHECK_MESSAGE(test::same_expansion(assemble_expansion(d, 6, br), compute_full_expansion({{a}, {b}}, br, 6), 6, &why),
                      why);
    }
    // the stored data is what the generator produces
    CHECK(to_json(kummer_local_data(a, b, Branch::Upper, 8)).dump() == fx["upper"]["local_data"].dump());
}
