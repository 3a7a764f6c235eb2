#include "hyperasym/asymp/full.hpp"
#include "hyperasym/asymp/residue.hpp"
#include "hyperasym/kernels/kernels.hpp"
#include "hyperasym/numerics/special.hpp"
#include "support.hpp"

#include <doctest.h>
#include <omp.h>

using namespace hyperasym;

namespace {

bool identical(const BigComplex& x, const BigComplex& y) { return x.re() == y.re() && x.im() == y.im(); }

std::vector<BigComplex> ring(int count, long radius, int P)
{
    Bits b = digits_to_bits(P + kGuardDigits);
    std::vector<BigComplex> out;
    for (int i = 0; i < count; ++i)
        out.push_back(BigComplex::polar(Real(radius, b), const_pi(b) * Real(Rational(i + 1, 2 * count + 2), b)));
    return out;
}

}  // namespace

TEST_CASE("parallel residue table equals the serial reference")
{
    omp_set_num_threads(4);
    std::vector<Rational> a{Rational(1, 4), Rational(5, 4), Rational(1, 3)}, b{Rational(1, 2), Rational(2, 3), Rational(7, 5)};
    auto s = lp_kernel(a, b, 16, Exec::Serial);
    auto p = lp_kernel(a, b, 16, Exec::Parallel);
    CHECK(s == p);
    CHECK(s == compute_Lp(a, b, 16));
    CHECK(kernel_threads() >= 1);
}

TEST_CASE("parallel evaluation equals the serial reference")
{
    omp_set_num_threads(4);
    HyperParams prm{{Rational(1, 3)}, {Rational(5, 7)}};
    AsymptoticExpansion e = compute_full_expansion(prm, Branch::Upper, 12);
    auto xs = ring(24, 40, 40);
    auto s = evaluate_kernel(e, xs, 40, Exec::Serial);
    auto p = evaluate_kernel(e, xs, 40, Exec::Parallel);
    REQUIRE(s.size() == p.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        CHECK(identical(s[i], p[i]));
    auto fs = pfq_kernel(prm.a, prm.b, xs, 40, Exec::Serial);
    auto fp = pfq_kernel(prm.a, prm.b, xs, 40, Exec::Parallel);
    for (std::size_t i = 0; i < fs.size(); ++i)
        CHECK(identical(fs[i], fp[i]));
}

TEST_CASE("exceptions propagate out of parallel jobs")
{
    auto zs = ring(8, 3, 30);
    CHECK_THROWS(pfq_kernel({Rational(1), Rational(1)}, {Rational(2)}, zs, 30, Exec::Parallel));
}
