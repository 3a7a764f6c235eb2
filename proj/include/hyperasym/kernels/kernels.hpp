#pragma once

#include "hyperasym/expansion/expansion.hpp"
#include "hyperasym/numerics/complex.hpp"

#include <vector>

namespace hyperasym {

// Serial reference paths and OpenMP paths produce identical results.
enum class Exec { Serial, Parallel };

// Residue series of R(s) z^s (see compute_Lp), one job per (group, k).
std::vector<LogSeries> lp_kernel(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t N,
                                 Exec exec);

// Truncated expansion at many points.
std::vector<BigComplex> evaluate_kernel(const AsymptoticExpansion& e, const std::vector<BigComplex>& x, int P,
                                        Exec exec);

// pFq(a; b; z_i) at many points.
std::vector<BigComplex> pfq_kernel(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                   const std::vector<BigComplex>& z, int P, Exec exec);

int kernel_threads();

}  // namespace hyperasym
