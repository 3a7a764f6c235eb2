#pragma once

#include "hyperasym/exact/params.hpp"

#include <optional>
#include <vector>

namespace hyperasym {

// For f = sum c_n z^n / n!, the Laplace transform sum c_n z^{-n-1}; entry k
// of the result is the coefficient of z^{-k}.
std::vector<Rational> laplace_coeffs(const std::vector<Rational>& c);

// E-function coefficients c_n of pFq(z) (so f = sum c_n z^n / n!).
std::vector<Rational> hypergeometric_e_coeffs(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                              std::size_t depth);
// Coefficients of z^{-k} in (1/z) pFq(1/z), k < depth + 1.
std::vector<Rational> inverse_hypergeometric_coeffs(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                                    std::size_t depth);

struct LaplaceIdentityReport {
    unsigned r = 1;
    std::size_t depth = 0;
    // G(z) = r^{-r} z^{r-1} g(z^r / r^r), coefficient by coefficient
    bool corrected_holds = false;
    std::optional<std::size_t> first_failure;
    // constant ratio of z^{r-1} g(z^r / r^r) to G(z), when it is constant
    std::optional<Rational> uncorrected_ratio;
};

// F(z) = pFq(a; b; z^r) with r = q - p + 1, G its Laplace transform, and
// g(z) = (1/z) q+1Fq(a, 1/r, ..., r/r; b; 1/z); compares through n < depth.
LaplaceIdentityReport check_laplace_identity(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                             std::size_t depth);

}  // namespace hyperasym
