#include "hyperasym/kernels/kernels.hpp"

#include "hyperasym/asymp/gamma_quotient.hpp"
#include "hyperasym/asymp/residue.hpp"
#include "hyperasym/expansion/evaluate.hpp"
#include "hyperasym/numerics/hypergeom.hpp"

#include <omp.h>

#include <exception>
#include <utility>

namespace hyperasym {

namespace {

// Runs body(i) for i < n; rethrows the first exception from any thread.
template <class F>
void run_jobs(std::size_t n, Exec exec, F&& body)
{
    if (exec == Exec::Serial) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(n); ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(kernel_error)
            if (!err)
                err = std::current_exception();
        }
    }
    if (err)
        std::rethrow_exception(err);
}

}  // namespace

int kernel_threads()
{
    return omp_get_max_threads();
}

std::vector<LogSeries> lp_kernel(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t N,
                                 Exec exec)
{
    GammaQuotient R = GammaQuotient::from_params(a, b);
    const std::size_t G = R.groups.size();
    std::vector<std::vector<HElement>> res(G * N);
    run_jobs(G * N, exec, [&](std::size_t job) {
        res[job] = residue_at(R, job / N, static_cast<unsigned long>(job % N));
    });
    std::vector<LogSeries> out;
    for (std::size_t m = 0; m < G; ++m) {
        LogSeries s(R.groups[m].representative, N);
        for (std::size_t k = 0; k < N; ++k) {
            const auto& r = res[m * N + k];
            for (std::size_t i = 0; i < r.size(); ++i)
                s.add(i, k, r[i]);
        }
        s.trim();
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<BigComplex> evaluate_kernel(const AsymptoticExpansion& e, const std::vector<BigComplex>& x, int P,
                                        Exec exec)
{
    std::vector<BigComplex> out(x.size());
    run_jobs(x.size(), exec, [&](std::size_t i) { out[i] = evaluate_expansion(e, x[i], P); });
    return out;
}

std::vector<BigComplex> pfq_kernel(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                   const std::vector<BigComplex>& z, int P, Exec exec)
{
    std::vector<BigComplex> out(z.size());
    run_jobs(z.size(), exec, [&](std::size_t i) { out[i] = n_pFq(a, b, z[i], P); });
    return out;
}

}  // namespace hyperasym
