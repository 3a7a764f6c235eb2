#pragma once

#include "hyperasym/exact/cyclo.hpp"
#include "hyperasym/hring/json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hyperasym {

struct IdentityReport {
    std::string identity;
    std::size_t depth = 0;
    bool ok = true;
    std::optional<std::size_t> first_failure;
    double max_error = 0;  // numeric suites only
    std::string detail;
};

Json to_json(const IdentityReport& r);

// E-series coefficients c_n of f = sum c_n z^n / n!.
using ESeries = std::vector<CycloNumber>;

// f g in the z^n/n! basis: binomial convolution.
ESeries e_product(const ESeries& f, const ESeries& g);

// L(z) = sum_n (sum_k C(n,k) C(n+k,n)) z^n/n! against e^{(3-2 sqrt2) z} 1F1[1/2; 1; 4 sqrt2 z].
IdentityReport check_L_identity(std::size_t N);
// H(z) = sum_n H_n z^n/n! against z e^z 2F2[1,1; 2,2; -z].
IdentityReport check_H_identity(std::size_t N);
// 1F1[alpha+1; alpha; z] against (1 + z/alpha) e^z.
IdentityReport check_alpha_identity(const CycloNumber& alpha, std::size_t N);

enum class AnnihilatorForm { Printed, Corrected };

// f = sum_{n>=2} (sum_{k<n} alpha^k / k^s) z^n / n! under
// P(theta-2) + z Q(theta-1) + z^2 R(theta). Printed:
//   P = (x+2)(x+1)^{s+1}, Q = (x+1)(alpha x^s - (x+1)^s), R = alpha x^s.
// Corrected: P = x(x+2)(x+1)^{s+1}, Q = -x(x+1)((x+1)^s + alpha x^s), R = alpha x^{s+1}.
// Optional perturbation adds delta to the constant term of Q.
IdentityReport check_annihilator(unsigned s, const CycloNumber& alpha, std::size_t N,
                                 AnnihilatorForm form = AnnihilatorForm::Printed,
                                 const CycloNumber& perturb_q = CycloNumber(0));
// Coefficients of the operator applied to f, through z^N.
std::vector<CycloNumber> annihilator_residual(unsigned s, const CycloNumber& alpha, std::size_t N,
                                              AnnihilatorForm form, const CycloNumber& perturb_q = CycloNumber(0));

// Digamma / polylog / Hurwitz relations at rationals with denominator q and
// roots of unity of order q, 0 < p <= q <= qmax, 2 <= s <= smax, numerically
// at P digits. One report per identity (gauss1 .. gauss5, plus symbolic
// rewrites checked numerically).
std::vector<IdentityReport> check_gauss_suite(unsigned qmax, unsigned smax, int P);

}  // namespace hyperasym
