#include "hyperasym/numerics/bernoulli.hpp"
#include "hyperasym/numerics/hypergeom.hpp"
#include "hyperasym/numerics/special.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hyperasym;
using test::complex_from;
using test::real_from;
using test::rel;

// Reference digits computed independently with mpmath at 60 digits.
namespace ref {
const char* euler = "0.5772156649015328606065120900824024310421593359399235988";
const char* gamma_third = "2.678938534707747633655692940974677644128689377957301101";
const char* gamma_half = "1.772453850905516027298167483341145182797549456122387128";
const char* zeta5 = "1.036927755143369926331365486457034168057080919501912812";
const char* hurwitz_2_quarter = "17.1973291545071107392713191193352240215068944014941677";
const char* hurwitz_3_two_fifths = "16.11956431178917847526563373333078988139648151118044162";
const char* psi_half = "-1.963510026021423479440976332998755567193159604660434107";
const char* psi1_third = "10.09559712542709408179200409989251636051890411928097814";
const char* li2_i_re = "-0.2056167583560283045590518958307531486523687376508498047";
const char* li2_i_im = "0.9159655941772190150546035149323841107741493742816721343";
const char* li3_half = "0.5372131936080402009406232255949658266704024993403781707";
const char* f21_half_half_1_m2 = "0.7457491873163296099624820653534511043026751979832218672";
}  // namespace ref

TEST_CASE("gamma")
{
    CHECK(rel(n_gamma(Rational(1), 30), BigComplex(1, 128)) < 1e-28);
    CHECK(rel(n_gamma(Rational(5), 30), BigComplex(24, 128)) < 1e-28);
    CHECK(rel(n_gamma(Rational(1, 2), 50), complex_from(ref::gamma_half)) < 1e-46);
    CHECK(rel(n_gamma(Rational(1, 3), 50), complex_from(ref::gamma_third)) < 1e-46);
    CHECK_THROWS(n_gamma(Rational(-2), 30));
    // Gamma(1/2)^2 = pi
    BigComplex g = n_gamma(Rational(1, 2), 40);
    CHECK(rel(g * g, BigComplex(const_pi(200))) < 1e-36);
}

TEST_CASE("gamma reflection for q <= 12")
{
    const int P = 40;
    const Bits b = digits_to_bits(P + kGuardDigits);
    for (long q = 2; q <= 12; ++q)
        for (long p = 1; p < q; ++p) {
            Rational r(p, q);
            BigComplex prod = n_gamma(r, P) * n_gamma(Rational(1) - r, P);
            prod *= sin(const_pi(b) * Real(r, b)) / const_pi(b);
            CHECK(rel(prod, BigComplex(1, b)) < 1e-36);
        }
}

TEST_CASE("hurwitz zeta")
{
    Bits b = digits_to_bits(40);
    Real pi = const_pi(b);
    CHECK(rel(n_hurwitz(2, Rational(1), 20), BigComplex(pi * pi / Real(6, b))) < 1e-16);
    CHECK(rel(n_hurwitz(2, Rational(1, 2), 20), n_hurwitz(2, Rational(1), 20) * Real(3, b)) < 1e-16);
    CHECK(rel(n_hurwitz(5, Rational(1), 50), complex_from(ref::zeta5)) < 1e-46);
    CHECK(rel(n_hurwitz(2, Rational(1, 4), 50), complex_from(ref::hurwitz_2_quarter)) < 1e-46);
    CHECK(rel(n_hurwitz(3, Rational(2, 5), 50), complex_from(ref::hurwitz_3_two_fifths)) < 1e-46);
}

TEST_CASE("digamma and polygamma")
{
    CHECK(rel(n_psi_k(0, Rational(1), 50), -complex_from(ref::euler)) < 1e-46);
    CHECK(rel(n_psi_k(0, Rational(1, 2), 50), complex_from(ref::psi_half)) < 1e-46);
    CHECK(rel(n_psi_k(1, Rational(1), 30), n_hurwitz(2, Rational(1), 30)) < 1e-26);
    CHECK(rel(n_psi_k(1, Rational(1, 3), 50), complex_from(ref::psi1_third)) < 1e-46);
}

TEST_CASE("euler constant")
{
    CHECK(rel(n_euler_gamma(50), complex_from(ref::euler)) < 1e-46);
    // harmonic-sum route against MPFR's own constant
    Bits b = digits_to_bits(60);
    CHECK(rel(n_euler_gamma(50), BigComplex(const_euler_mpfr(b))) < 1e-46);
    CHECK(abs(n_psi_k(0, Rational(1), 40) + n_euler_gamma(40)).to_double() < 1e-36);
    CHECK(rel(n_euler_gamma(30), n_euler_gamma(40)) < 1e-26);
}

TEST_CASE("polylog")
{
    Bits b = digits_to_bits(70);
    CHECK(rel(n_polylog(1, BigComplex(-1, b), 40), BigComplex(-log(Real(2, b)))) < 1e-36);
    CHECK(rel(n_polylog(2, BigComplex(1, b), 40), n_hurwitz(2, Rational(1), 40)) < 1e-36);
    BigComplex i(Real(0, b), Real(1, b));
    CHECK(rel(n_polylog(2, i, 50), complex_from(ref::li2_i_re, ref::li2_i_im)) < 1e-46);
    CHECK(rel(n_polylog_unity(2, Rational(1, 4), 50), complex_from(ref::li2_i_re, ref::li2_i_im)) < 1e-46);
    CHECK(rel(n_polylog(3, BigComplex(Rational(1, 2), b), 50), complex_from(ref::li3_half)) < 1e-46);
}

TEST_CASE("pFq series")
{
    Bits b = digits_to_bits(70);
    CHECK(rel(n_pFq({Rational(1)}, {Rational(1)}, BigComplex(1, b), 40), BigComplex(exp(Real(1, b)))) < 1e-36);
    CHECK(rel(n_pFq({Rational(1), Rational(1)}, {Rational(2)}, BigComplex(Rational(1, 2), b), 40),
              BigComplex(Real(2, b) * log(Real(2, b)))) < 1e-36);
    Real e10 = (exp(Real(10, b)) - Real(1, b)) / Real(10, b);
    CHECK(rel(n_pFq({Rational(1)}, {Rational(2)}, BigComplex(10, b), 40), BigComplex(e10)) < 1e-36);
    // Pfaff: 2F1(1/2,1/2;1;-2) = 3^{-1/2} 2F1(1/2,1/2;1;2/3)
    BigComplex v = n_pFq({Rational(1, 2), Rational(1, 2)}, {Rational(1)}, BigComplex(Rational(2, 3), b), 50);
    v *= Real(1, b) / sqrt(Real(3, b));
    CHECK(rel(v, complex_from(ref::f21_half_half_1_m2)) < 1e-46);
    CHECK_THROWS(n_pFq({Rational(1), Rational(1)}, {Rational(2)}, BigComplex(2, b), 30));
}

TEST_CASE("precision monotonicity")
{
    for (Rational r : {Rational(1, 7), Rational(2, 3), Rational(11, 12)}) {
        CHECK(rel(n_gamma(r, 30), n_gamma(r, 40)) < 1e-26);
        CHECK(rel(n_psi_k(0, r, 30), n_psi_k(0, r, 40)) < 1e-26);
        CHECK(rel(n_hurwitz(3, r, 30), n_hurwitz(3, r, 40)) < 1e-26);
    }
}

TEST_CASE("bernoulli numbers")
{
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == Rational(0));
    CHECK(bernoulli(12) == Rational(-691, 2730));
}
