#include "hyperasym/exact/cyclo.hpp"
#include "hyperasym/exact/params.hpp"
#include "hyperasym/numerics/special.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace hyperasym;

namespace {

const CycloNumber kSqrt2 = CycloNumber::sqrt2();

CycloNumber random_cyclo(std::mt19937& rng)
{
    static const unsigned long conductors[] = {1, 3, 4, 5, 8, 12};
    unsigned long n = conductors[rng() % 6];
    std::vector<Rational> c;
    for (unsigned long i = 0; i < euler_phi(n); ++i)
        c.push_back(Rational(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 6) + 1));
    return CycloNumber::from_coeffs(n, c);
}

}  // namespace

TEST_CASE("rational canonical form")
{
    CHECK(Rational::parse("-6/4").str() == "-3/2");
    CHECK(Rational::parse("0/7").str() == "0");
    CHECK(Rational::parse("-3/7") == Rational(-3) / Rational(7));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("6/-4"), std::invalid_argument);
    CHECK(Rational(7, 3).frac() == Rational(1, 3));
    CHECK(Rational(-7, 3).frac() == Rational(2, 3));
    CHECK(Rational(-7, 3).floor() == -3);
}

TEST_CASE("pochhammer")
{
    CHECK(pochhammer(Rational(5, 3), 0) == Rational(1));
    CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
    CHECK(pochhammer(Rational(-2), 4) == Rational(0));
    std::mt19937 rng(7);
    for (int it = 0; it < 50; ++it) {
        Rational a(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) + 1);
        unsigned long m = rng() % 21, n = rng() % 21;
        CHECK(pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + Rational(static_cast<long>(m)), n));
    }
}

TEST_CASE("group_parameters")
{
    auto g = group_parameters({Rational(1, 3), Rational(4, 3), Rational(1, 2)});
    REQUIRE(g.size() == 2);
    CHECK(g[0].representative == Rational(1, 3));
    CHECK(g[0].offsets == std::vector<unsigned long>{0, 1});
    CHECK(g[1].representative == Rational(1, 2));
    CHECK(g[1].multiplicity() == 1);

    g = group_parameters({Rational(1, 4)});
    REQUIRE(g.size() == 1);
    CHECK(g[0].multiplicity() == 1);

    g = group_parameters({Rational(3, 2), Rational(1, 2), Rational(5, 2)});
    REQUIRE(g.size() == 1);
    CHECK(g[0].representative == Rational(1, 2));
    CHECK(g[0].offsets == std::vector<unsigned long>{0, 1, 2});

    CHECK_THROWS(group_parameters({Rational(-1)}));
}

TEST_CASE("group_parameters is permutation invariant")
{
    std::mt19937 rng(11);
    for (int it = 0; it < 30; ++it) {
        std::vector<Rational> a;
        for (int i = 0; i < 5; ++i)
            a.push_back(Rational(static_cast<long>(rng() % 12) + 1, static_cast<long>(rng() % 4) + 1));
        auto ref = group_parameters(a);
        std::shuffle(a.begin(), a.end(), rng);
        auto g = group_parameters(a);
        REQUIRE(g.size() == ref.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            CHECK(g[i].representative == ref[i].representative);
            CHECK(g[i].offsets == ref[i].offsets);
        }
    }
}

TEST_CASE("nu")
{
    CHECK(nu({{Rational(1)}, {Rational(2)}}) == Rational(-1));
    CHECK(nu({{Rational(1, 3)}, {Rational(5, 7)}}) == Rational(-8, 21));
    CHECK(nu({{Rational(1), Rational(1)}, {Rational(2), Rational(2)}}) == Rational(-2));
}

TEST_CASE("hyper params validation")
{
    HyperParams p{{Rational(1)}, {Rational(-2)}};
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    HyperParams q{{Rational(-2)}, {Rational(1, 2)}};
    CHECK(q.is_polynomial());
}

TEST_CASE("cyclotomic field axioms")
{
    std::mt19937 rng(3);
    for (int it = 0; it < 60; ++it) {
        CycloNumber x = random_cyclo(rng), y = random_cyclo(rng), z = random_cyclo(rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK((x + y) * z == x * z + y * z);
        CHECK(x * y == y * x);
        if (!x.is_zero())
            CHECK((x * x.inverse()).is_one());
    }
}

TEST_CASE("cyclotomic embedding is a ring homomorphism")
{
    std::mt19937 rng(5);
    const Bits prec = digits_to_bits(50 + kGuardDigits);
    for (int it = 0; it < 40; ++it) {
        CycloNumber x = random_cyclo(rng), y = random_cyclo(rng);
        BigComplex lhs = embed(x * y, prec), rhs = embed(x, prec) * embed(y, prec);
        CHECK(abs(lhs - rhs).to_double() <= 1e-46 * std::max(1.0, abs(rhs).to_double()));
        BigComplex s = embed(x + y, prec) - embed(x, prec) - embed(y, prec);
        CHECK(abs(s).to_double() <= 1e-46);
    }
}

TEST_CASE("cyclotomic constants")
{
    CHECK(kSqrt2 * kSqrt2 == CycloNumber(2));
    CycloNumber i = CycloNumber::imag_unit();
    CHECK(i * i == CycloNumber(-1));
    CHECK(CycloNumber::exp_i_pi(Rational(1)) == CycloNumber(-1));
    CycloNumber s = CycloNumber::sin_pi(Rational(1, 3));
    CHECK(s * s == CycloNumber(Rational(3, 4)));
    CHECK(CycloNumber::parse(kSqrt2.str()) == kSqrt2);
    CHECK(CycloNumber::parse("cyclo(8)[0,1,0,-1]") == kSqrt2);
    CHECK(CycloNumber::parse("2/3") == CycloNumber(Rational(2, 3)));
    CHECK(kSqrt2.lifted(24).minimized() == kSqrt2);
    CHECK(CycloNumber::root_of_unity(6, 1).root_of_unity_angle() == Rational(1, 6));
}

TEST_CASE("galochkin classifier")
{
    CycloNumber one(1);
    auto v = galochkin_classify({kSqrt2 + one}, {kSqrt2});
    CHECK(v.is_E_function);
    REQUIRE(v.pairing.size() == 1);
    CHECK(v.pairing[0].first - v.pairing[0].second == one);

    CHECK_FALSE(galochkin_classify({kSqrt2}, {one}).is_E_function);

    v = galochkin_classify({CycloNumber(Rational(1, 3))}, {CycloNumber(Rational(5, 7))});
    CHECK(v.is_E_function);
    CHECK(v.pairing.empty());

    // matching needs more than greedy choice
    CycloNumber three(3), two(2);
    v = galochkin_classify({kSqrt2 + three, kSqrt2 + one}, {kSqrt2 + two, kSqrt2});
    CHECK(v.is_E_function);
    REQUIRE(v.pairing.size() == 2);
    for (const auto& [x, y] : v.pairing) {
        auto d = (x - y);
        CHECK(d.is_rational());
        CHECK(d.to_rational() > Rational(0));
        CHECK(d.to_rational().is_integer());
    }

    CHECK_THROWS_AS(galochkin_classify({CycloNumber(Rational(1, 2))}, {CycloNumber(Rational(1, 2))}),
                    std::invalid_argument);
}
