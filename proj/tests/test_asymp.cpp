#include "hyperasym/asymp/ck.hpp"
#include "hyperasym/asymp/full.hpp"
#include "hyperasym/asymp/gamma_quotient.hpp"
#include "hyperasym/asymp/residue.hpp"
#include "hyperasym/continuation/continuation.hpp"
#include "hyperasym/expansion/evaluate.hpp"
#include "hyperasym/expansion/operator.hpp"
#include "hyperasym/hring/eval.hpp"
#include "hyperasym/numerics/hypergeom.hpp"
#include "hyperasym/numerics/special.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace hyperasym;
using test::complex_from;
using test::rel;

namespace {

BigComplex point(double abs_x, const Rational& arg_over_pi, const CycloNumber& lambda = CycloNumber(1), int P = 50)
{
    Bits b = digits_to_bits(P + kGuardDigits);
    Rational th = arg_over_pi - Rational(2) * lambda_angle(lambda);
    return BigComplex::polar(Real(static_cast<long>(abs_x), b), const_pi(b) * Real(th, b));
}

double expansion_error(const HyperParams& p, Branch br, std::size_t N, const BigComplex& x, int P = 50)
{
    return rel(evaluate_expansion(compute_full_expansion(p, br, N), x, P), n_pFq(p, x, P));
}

Rational classical_ck(const Rational& a, const Rational& b, unsigned long k)
{
    return pochhammer(b - a, k) * pochhammer(Rational(1) - a, k) / Rational(factorial(k));
}

HyperParams random_params(std::mt19937& rng, std::size_t p)
{
    auto r = [&] {
        long d = static_cast<long>(rng() % 8) + 1;
        return Rational(static_cast<long>(rng() % (3 * d)) + 1, d);
    };
    HyperParams h;
    for (std::size_t i = 0; i < p; ++i) {
        h.a.push_back(r());
        h.b.push_back(r());
    }
    return h;
}

}  // namespace

TEST_CASE("gamma quotient pole orders")
{
    GammaQuotient R = GammaQuotient::from_params({Rational(1, 4), Rational(5, 4)}, {Rational(1, 2), Rational(2, 3)});
    REQUIRE(R.groups.size() == 1);
    CHECK(R.pole_order(0, 0) == 1);
    CHECK(R.pole_order(0, 1) == 2);
    CHECK(R.pole_order(0, 5) == 2);
    // b cancels a pole: Gamma(1/3 + s) / Gamma(4/3 + s) = 1/(1/3 + s)
    GammaQuotient S = GammaQuotient::from_params({Rational(1, 3)}, {Rational(4, 3)});
    CHECK(S.pole_order(0, 0) == 1);
    CHECK(S.pole_order(0, 1) == 0);
    // Gamma(-s) contributes nothing at -c - k for non-integer c
    GammaQuotient T = GammaQuotient::from_params({Rational(2, 5)}, {Rational(1, 2)});
    GammaQuotient U = GammaQuotient::from_params({Rational(2, 5)}, {Rational(1, 2)}, false);
    for (unsigned long k = 0; k < 6; ++k)
        CHECK(T.pole_order(0, k) == U.pole_order(0, k));
}

TEST_CASE("simple poles agree with the closed formula")
{
    std::vector<Rational> a{Rational(1, 3), Rational(1, 2), Rational(3, 4)}, b{Rational(5, 7), Rational(2), Rational(1, 6)};
    GammaQuotient R = GammaQuotient::from_params(a, b);
    REQUIRE(R.groups.size() == 3);
    for (std::size_t m = 0; m < 3; ++m) {
        std::size_t j = std::find(a.begin(), a.end(), R.groups[m].representative) - a.begin();
        for (unsigned long k = 0; k < 5; ++k) {
            auto r = residue_at(R, m, k);
            REQUIRE(r.size() == 1);
            CHECK(h_normalize(r[0]) == h_normalize(simple_pole_residue(a, b, j, k)));
        }
    }
}

TEST_CASE("double pole residue against a numeric contour integral")
{
    // residue of R(s) z^s at s = -5/4 for a = [1/4, 5/4], b = [1/2, 2/3], z = 3
    std::vector<Rational> a{Rational(1, 4), Rational(5, 4)}, b{Rational(1, 2), Rational(2, 3)};
    GammaQuotient R = GammaQuotient::from_params(a, b);
    auto res = residue_at(R, 0, 1);
    REQUIRE(res.size() == 2);
    CHECK_FALSE(res[1].is_zero());
    const int P = 30;
    const Bits bits = digits_to_bits(P + kGuardDigits);
    Real pi = const_pi(bits), three(3, bits);
    Real L = log(three);
    BigComplex symbolic(bits);
    Real zs0 = pow(three, Real(Rational(-5, 4), bits));
    symbolic += h_eval(res[0], P) * zs0;
    symbolic += h_eval(res[1], P) * (zs0 * -L);
    // trapezoidal rule on |s + 5/4| = 1/10
    const int M = 48;
    BigComplex acc(bits);
    for (int j = 0; j < M; ++j) {
        BigComplex w = BigComplex::polar(Real(Rational(1, 10), bits), Real(2, bits) * pi * Real(Rational(j, M), bits));
        BigComplex s = w + BigComplex(Rational(-5, 4), bits);
        BigComplex f = n_gamma(s + BigComplex(a[0], bits), P) * n_gamma(s + BigComplex(a[1], bits), P) *
                       n_gamma(-s, P) / (n_gamma(s + BigComplex(b[0], bits), P) * n_gamma(s + BigComplex(b[1], bits), P));
        f *= exp(s * BigComplex(L));
        acc += f * w;
    }
    acc *= Real(1, bits) / Real(M, bits);
    CHECK(rel(acc, symbolic) < 1e-20);
}

TEST_CASE("L-part examples")
{
    auto L = compute_Lp({Rational(1)}, {Rational(2)}, 6);
    REQUIRE(L.size() == 1);
    CHECK(L[0].alpha() == Rational(1));
    CHECK(h_normalize(L[0].coeff(0, 0)) == HElement(1));
    for (std::size_t n = 1; n < 6; ++n)
        CHECK(L[0].coeff(0, n).is_zero());

    HyperParams k{{Rational(1)}, {Rational(2)}};
    AsymptoticExpansion e = absorb_prefactor(compute_full_expansion(k, Branch::Upper, 6));
    CHECK(h_normalize(e.parts.at(0).at(0).coeff(0, 0)) == HElement(-1));

    auto G = compute_Lp({Rational(1, 4), Rational(5, 4)}, {Rational(1, 2), Rational(2, 3)}, 4);
    REQUIRE(G.size() == 1);
    CHECK(G[0].log_count() == 2);

    auto H = compute_Lp({Rational(1, 2)}, {Rational(1)}, 3);
    CHECK(H[0].alpha() == Rational(1, 2));
    CHECK(h_normalize(H[0].coeff(0, 0)) == HElement(1));
    // with the prefactor: an algebraic multiple of 1/Gamma(1/2)
    HyperParams q{{Rational(1, 2)}, {Rational(1)}};
    HElement c = absorb_prefactor(compute_full_expansion(q, Branch::Upper, 3)).parts.at(0).at(0).coeff(0, 0);
    CHECK(h_normalize(c * h_gamma(Rational(1, 2))).as_scalar().has_value());
}

TEST_CASE("C_k")
{
    HyperParams p21{{Rational(2)}, {Rational(1)}};
    CHECK(nu(p21) == Rational(1));
    auto c = compute_Ck(p21, 4, CkMethod::Recursion);
    CHECK(c.values[0] == CycloNumber(1));
    CHECK(c.values[1] == CycloNumber(1));
    CHECK(c.values[2] == CycloNumber(0));
    HyperParams p12{{Rational(1)}, {Rational(2)}};
    CHECK(compute_Ck(p12, 3, CkMethod::Recursion).values[1] == CycloNumber(0));
    CHECK(ck_method_name(CkMethod::NumericFit) == std::string("numeric_fit"));

    // the literal e_km has a b_j = 1 collision here
    CHECK_THROWS_AS(e_km(p21, 1, 0, CkReading::Rising), std::domain_error);
}

TEST_CASE("C_k readings against the classical 1F1 values")
{
    Rational a(1, 3), b(5, 7);
    HyperParams p{{a}, {b}};
    auto op = ck_operator(p, 6);
    auto cf = ck_closed_form(p, 6, CkReading::Corrected);
    auto ek = ck_via_ekm(p, 6, CkReading::Corrected);
    for (unsigned long k = 0; k <= 6; ++k) {
        CHECK(op[k] == classical_ck(a, b, k));
        CHECK(cf[k] == op[k]);
        CHECK(ek[k] == op[k]);
    }
    for (CkReading r : {CkReading::Rising, CkReading::Falling}) {
        CAPTURE(ck_reading_name(r));
        CHECK_FALSE(ck_via_ekm(p, 4, r) == std::vector<Rational>(op.begin(), op.begin() + 5));
        CHECK_FALSE(ck_closed_form(p, 4, r) == std::vector<Rational>(op.begin(), op.begin() + 5));
    }
}

TEST_CASE("C_k for higher p: operator, corrected e_km and closed form agree")
{
    HyperParams p{{Rational(1, 3), Rational(3, 4), Rational(1, 5)}, {Rational(5, 7), Rational(1, 2), Rational(9, 4)}};
    auto op = ck_operator(p, 6);
    CHECK(ck_via_ekm(p, 6, CkReading::Corrected) == op);
    CHECK(ck_closed_form(p, 6, CkReading::Corrected) == op);
}

TEST_CASE("C_k numeric fit")
{
    HyperParams p{{Rational(1, 2), Rational(1, 3)}, {Rational(2, 3), Rational(5, 4)}};
    double err = 1;
    auto fit = ck_numeric_fit(p, 4, {}, &err);
    auto op = ck_operator(p, 4);
    CHECK(err < 1e-10);
    for (std::size_t k = 0; k <= 4; ++k)
        CHECK(abs(fit[k] - Real(op[k], fit[k].prec())).to_double() < 1e-10);
    auto seq = compute_Ck(p, 4, CkMethod::NumericFit);
    CHECK(seq.method == CkMethod::NumericFit);
    CHECK(seq.approx.size() == 5);
    for (std::size_t k = 0; k <= 4; ++k)
        CHECK(seq.values[k] == CycloNumber(op[k]));
}

TEST_CASE("exp is reproduced exactly")
{
    HyperParams p{{Rational(1)}, {Rational(1)}};
    AsymptoticExpansion e = compute_full_expansion(p, Branch::Upper, 8);
    CHECK(h_normalize(e.prefactor) == HElement(1));
    CHECK(e.parts[0].empty());
    REQUIRE(e.parts.at(1).size() == 1);
    const LogSeries& k = e.parts.at(1)[0];
    CHECK(k.alpha() == Rational(0));
    CHECK(h_normalize(k.coeff(0, 0)) == HElement(1));
    for (std::size_t n = 1; n < 8; ++n)
        CHECK(k.coeff(0, n).is_zero());
}

TEST_CASE("Kummer expansion against the series")
{
    HyperParams p{{Rational(1, 3)}, {Rational(5, 7)}};
    BigComplex x = point(40, Rational(1, 3));
    // reference value from an independent evaluation at 60 digits
    BigComplex ref = complex_from("-53954185.09554491508783558717993001974497302802362376127",
                                  "17944185.00857544670689779900943256384376267198109039002");
    CHECK(rel(n_pFq(p, x, 50), ref) < 1e-46);
    double e12 = expansion_error(p, Branch::Upper, 12, x);
    double e20 = expansion_error(p, Branch::Upper, 20, x);
    CHECK(e12 < 2e-12);
    CHECK(e20 < 1e-15);
    // lower sector
    CHECK(expansion_error(p, Branch::Lower, 20, point(40, Rational(-1, 2))) < 1e-15);
}

TEST_CASE("truncation error decreases with depth")
{
    HyperParams p{{Rational(1, 3)}, {Rational(5, 7)}};
    BigComplex x = point(40, Rational(1, 2));
    double prev = 1;
    for (std::size_t N = 2; N <= 20; N += 3) {
        double e = expansion_error(p, Branch::Upper, N, x);
        CHECK(e < prev);
        prev = e;
    }
}

TEST_CASE("multiple poles give log terms and match the series")
{
    HyperParams p{{Rational(1, 4), Rational(5, 4)}, {Rational(1, 2), Rational(2, 3)}};
    AsymptoticExpansion e = compute_full_expansion(p, Branch::Upper, 10);
    CHECK(e.has_log_term());
    BigComplex x = point(50, Rational(1, 3));
    BigComplex ref = complex_from("183293388670.8881007485698860349625415360245668288113442",
                                  "-63856745520.39076142223293992178197079469173643113307199");
    CHECK(rel(evaluate_expansion(e, x, 50), ref) < 1e-12);
}

TEST_CASE("1F1[1/2; 1] leading L term")
{
    HyperParams p{{Rational(1, 2)}, {Rational(1)}};
    AsymptoticExpansion e = compute_full_expansion(p, Branch::Upper, 16);
    REQUIRE(e.parts.at(0).size() == 1);
    CHECK(e.parts.at(0)[0].alpha() == Rational(1, 2));
    CHECK(expansion_error(p, Branch::Upper, 16, point(40, Rational(1, 2))) < 1e-13);
    CHECK(expansion_error(p, Branch::Lower, 16, point(40, Rational(-2, 3))) < 1e-13);
}

TEST_CASE("branches share the exponential part")
{
    HyperParams p{{Rational(1, 3), Rational(2, 5)}, {Rational(5, 7), Rational(3, 2)}};
    AsymptoticExpansion u = compute_full_expansion(p, Branch::Upper, 8), l = compute_full_expansion(p, Branch::Lower, 8);
    REQUIRE(u.parts.at(1).size() == l.parts.at(1).size());
    for (std::size_t j = 0; j < u.parts.at(1).size(); ++j)
        CHECK(u.parts.at(1)[j] == l.parts.at(1)[j]);
    // exponential-part coefficients are algebraic
    for (const auto& s : u.parts.at(1))
        for (std::size_t n = 0; n < 8; ++n)
            CHECK(s.coeff(0, n).as_scalar().has_value());
}

TEST_CASE("roots of unity as lambda")
{
    HyperParams p{{Rational(1, 3)}, {Rational(5, 7)}};
    p.lambda = CycloNumber::imag_unit();
    CHECK(lambda_angle(p.lambda) == Rational(1, 4));
    CHECK(expansion_error(p, Branch::Upper, 20, point(40, Rational(1, 2), p.lambda)) < 1e-15);
    CHECK(expansion_error(p, Branch::Lower, 20, point(40, Rational(-1, 2), p.lambda)) < 1e-15);
    p.lambda = CycloNumber(-1);
    CHECK(expansion_error(p, Branch::Upper, 20, point(40, Rational(2, 3), p.lambda)) < 1e-15);
    CHECK_THROWS_AS(lambda_angle(CycloNumber(2)), std::invalid_argument);
}

TEST_CASE("terminating series")
{
    HyperParams p{{Rational(-3)}, {Rational(1, 2)}};
    AsymptoticExpansion e = compute_full_expansion(p, Branch::Upper, 6);
    Bits b = digits_to_bits(60);
    BigComplex x(Rational(5, 2), b);
    CHECK(rel(evaluate_expansion(e, x, 40), n_pFq(p, x, 40)) < 1e-36);
    CHECK(apply_hyp_operator(p, e).zero);
}

TEST_CASE("random parameters are annihilated by the operator")
{
    std::mt19937 rng(424242);
    for (int it = 0; it < 30; ++it) {
        HyperParams p = random_params(rng, 1 + rng() % 3);
        CAPTURE(p.str());
        CHECK(apply_hyp_operator(p, compute_full_expansion(p, it % 2 ? Branch::Upper : Branch::Lower, 8)).zero);
    }
}
