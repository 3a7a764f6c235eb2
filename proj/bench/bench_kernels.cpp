#include "hyperasym/asymp/full.hpp"
#include "hyperasym/kernels/kernels.hpp"
#include "hyperasym/numerics/special.hpp"

#include <benchmark/benchmark.h>

using namespace hyperasym;

namespace {

const std::vector<Rational> kA{Rational(1, 4), Rational(5, 4), Rational(1, 3)};
const std::vector<Rational> kB{Rational(1, 2), Rational(2, 3), Rational(7, 5)};

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

std::vector<BigComplex> points(int count, int P)
{
    Bits b = digits_to_bits(P + kGuardDigits);
    std::vector<BigComplex> out;
    for (int i = 0; i < count; ++i)
        out.push_back(BigComplex::polar(Real(40, b), const_pi(b) * Real(Rational(i + 1, 2 * count + 2), b)));
    return out;
}

void BM_residue_table(benchmark::State& state)
{
    Exec e = exec_of(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(lp_kernel(kA, kB, 24, e));
    state.SetLabel(e == Exec::Parallel ? "parallel" : "serial");
}

void BM_expansion_batch(benchmark::State& state)
{
    Exec e = exec_of(state);
    AsymptoticExpansion ex = compute_full_expansion({kA, kB}, Branch::Upper, 16);
    auto xs = points(64, 50);
    for (auto _ : state)
        benchmark::DoNotOptimize(evaluate_kernel(ex, xs, 50, e));
    state.SetLabel(e == Exec::Parallel ? "parallel" : "serial");
}

void BM_series_batch(benchmark::State& state)
{
    Exec e = exec_of(state);
    auto xs = points(32, 50);
    for (auto _ : state)
        benchmark::DoNotOptimize(pfq_kernel(kA, kB, xs, 50, e));
    state.SetLabel(e == Exec::Parallel ? "parallel" : "serial");
}

}  // namespace

BENCHMARK(BM_residue_table)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_expansion_batch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_series_batch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
