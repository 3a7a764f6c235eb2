#pragma once

#include "hyperasym/exact/params.hpp"
#include "hyperasym/numerics/real.hpp"

#include <string>
#include <vector>

namespace hyperasym {

enum class CkMethod { Recursion, ClosedForm, NumericFit };
const char* ck_method_name(CkMethod m);

// How the Pochhammer symbols and factors of the two published formulas are
// read. Rising/Falling take the formulas verbatim with (x)_n rising or
// falling; Corrected is the variant that reproduces the exponential part of
// 1F1 and of the numeric fit (see README).
enum class CkReading { Rising, Falling, Corrected };
const char* ck_reading_name(CkReading r);

struct CkSequence {
    CkMethod method = CkMethod::Recursion;
    std::vector<CycloNumber> values;  // C_0 .. C_K, exact
    std::vector<Real> approx;         // numeric_fit only
    double fit_error = 0;             // numeric_fit: estimated error of C_1..C_K
};

// e_{k,m} with b_{p+1} = 1; throws std::domain_error when two of
// b_1..b_p, 1 coincide.
Rational e_km(const HyperParams& params, unsigned long k, unsigned long m, CkReading reading);

// C_k = (1/k) sum_{m<k} e_{k,m} C_m.
std::vector<Rational> ck_via_ekm(const HyperParams& params, std::size_t K, CkReading reading);
// Multinomial sum over k_1 + ... + k_p = k.
std::vector<Rational> ck_closed_form(const HyperParams& params, std::size_t K, CkReading reading);
// Coefficient recursion of the differential operator conjugated by e^x;
// never singular.
std::vector<Rational> ck_operator(const HyperParams& params, std::size_t K);

struct NumericFitOptions {
    int digits = 80;           // accuracy of each pFp evaluation
    std::size_t unknowns = 30;
    long x_lo = 1000, x_hi = 2000;
};

// Least-structure oracle: interpolates e^{-x} x^{-nu} prod Gamma(a)/prod Gamma(b) pFp(x)
// in u = 1/x at real nodes and reads off C_0..C_K.
std::vector<Real> ck_numeric_fit(const HyperParams& params, std::size_t K, const NumericFitOptions& opt = {},
                                 double* error_estimate = nullptr);

// Recursion uses the operator reading (never singular); ClosedForm the
// corrected multinomial sum; NumericFit fills values from the operator
// recursion after checking them against the fit to 1e-10.
CkSequence compute_Ck(const HyperParams& params, std::size_t K, CkMethod method);

}  // namespace hyperasym
