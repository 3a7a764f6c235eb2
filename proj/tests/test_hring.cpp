#include "hyperasym/asymp/residue.hpp"
#include "hyperasym/hring/eval.hpp"
#include "hyperasym/hring/factory.hpp"
#include "hyperasym/hring/json.hpp"
#include "hyperasym/hring/parse.hpp"
#include "hyperasym/numerics/special.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace hyperasym;
using test::complex_from;
using test::random_expression;
using test::rel;

TEST_CASE("normalization examples")
{
    CHECK(h_normalize(parse_helement("Psi(1)")) == -h_euler_gamma());
    CHECK(h_normalize(parse_helement("Gamma(5/2)")) == h_gamma(Rational(1, 2)) * CycloNumber(Rational(3, 4)));
    CHECK(h_normalize(parse_helement("Pi*InvPi")) == HElement(1));
    HElement li = h_normalize(parse_helement("Li(1, -1)"));
    CHECK(li.terms().size() == 2);
    Bits b = digits_to_bits(60);
    CHECK(rel(h_eval(li, 40), BigComplex(-log(Real(2, b)))) < 1e-36);
    // reflection pairs collapse to pi / sin(pi r)
    CHECK(h_normalize(pow(h_gamma(Rational(1, 2)), 2)) == h_pi());
    CHECK(h_normalize(h_gamma(Rational(1, 3)) * h_gamma(Rational(2, 3))) ==
          h_pi() * CycloNumber::sin_pi(Rational(1, 3)).inverse());
}

TEST_CASE("invert gamma")
{
    CHECK(h_invert_gamma(Rational(1)) == HElement(1));
    CHECK(h_invert_gamma(Rational(1, 2)) == h_inv_pi() * h_gamma(Rational(1, 2)));
    HElement third = h_invert_gamma(Rational(1, 3));
    CHECK(third == h_inv_pi() * h_gamma(Rational(2, 3)) * CycloNumber::sin_pi(Rational(1, 3)));
    CHECK(rel(h_eval(h_normalize(third * h_gamma(Rational(1, 3))), 40), BigComplex(1, 200)) < 1e-36);
}

TEST_CASE("gamma unit law for q <= 12")
{
    const int P = 50;
    for (long q = 1; q <= 12; ++q)
        for (long p = 1; p <= q; ++p) {
            Rational r(p, q);
            if (r.den() != q)
                continue;
            HElement x = h_normalize(h_gamma(r) * h_invert_gamma(r));
            CHECK(rel(h_eval(x, P), BigComplex(1, 256)) <= 1e-46);
        }
}

TEST_CASE("gamma derivatives")
{
    CHECK(h_gamma_derivative(0, Rational(1, 2)) == h_gamma(Rational(1, 2)));
    CHECK(h_normalize(h_gamma_derivative(1, Rational(1))) == -h_euler_gamma());
    HElement g2 = h_normalize(h_gamma_derivative(2, Rational(1)));
    CHECK(g2 == pow(h_euler_gamma(), 2) + h_hurwitz(2, Rational(1)));
    // Gamma''(1), independently computed to 55 digits
    CHECK(rel(h_eval(g2, 50), complex_from("1.978111990655945110790791303001269415878367041456428181")) < 1e-46);
}

TEST_CASE("evaluation")
{
    CHECK(rel(h_eval(HElement(1), 20), BigComplex(1, 128)) < 1e-18);
    CHECK(h_eval(h_euler_gamma(), 30).to_string(30).rfind("0.577215664901532860606512090082", 0) == 0);
    BigComplex d = h_eval(pow(h_gamma(Rational(1, 2)), 2) - h_pi(), 30);
    CHECK(abs(d).to_double() < 1e-26);
}

TEST_CASE("normalization is sound and idempotent on random elements")
{
    std::mt19937 rng(20261015);
    const int P = 50;
    int checked = 0;
    for (int it = 0; it < 200; ++it) {
        std::string e = random_expression(rng);
        HElement x = parse_helement(e);
        HElement n = h_normalize(x);
        CAPTURE(e);
        CHECK(h_normalize(n) == n);
        BigComplex vx = h_eval(x, P), vn = h_eval(n, P);
        double scale = std::max(1.0, abs(vx).to_double());
        CHECK(abs(vx - vn).to_double() <= 1e-46 * scale);
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_CASE("json round trip")
{
    std::mt19937 rng(99);
    for (int it = 0; it < 30; ++it) {
        HElement x = h_normalize(parse_helement(random_expression(rng)));
        CHECK(helement_from_json(to_json(x)) == x);
        CHECK(h_normalize(parse_helement(x.str())) == x);
    }
    Json g = atom_to_json(HAtom::gamma(Rational(1, 3)));
    CHECK(g.dump() == R"({"kind":"Gamma","r":"1/3"})");
    CHECK(atom_to_json(HAtom::hurwitz(3, Rational(2, 5))).dump() == R"({"kind":"HurwitzZeta","s":3,"r":"2/5"})");
}

TEST_CASE("parse errors")
{
    CHECK_THROWS_AS(parse_helement("Gamma(1/3"), ParseError);
    CHECK_THROWS_AS(parse_helement("Foo(2)"), ParseError);
    CHECK_THROWS_AS(parse_helement("1/Psi(1/3)"), ParseError);
}

TEST_CASE("gamma series")
{
    auto g = gamma_series_at(Rational(1), 3);
    CHECK(h_normalize(g[0]) == HElement(1));
    CHECK(h_normalize(g[1]) == -h_euler_gamma());
    CHECK(h_normalize(g[2]) == (pow(h_euler_gamma(), 2) + h_hurwitz(2, Rational(1))) * CycloNumber(Rational(1, 2)));
    CHECK(gamma_series_at(Rational(1, 2), 1)[0] == h_gamma(Rational(1, 2)));
}
