#pragma once

#include "hyperasym/hring/element.hpp"

#include <vector>

namespace hyperasym {

// Truncated Laurent expansion in e of a product of Gamma and linear factors,
// kept as e^v * C * exp(sum_{k>=1} l_k e^k).
class LaurentProduct {
public:
    explicit LaurentProduct(std::size_t order) : order_(order), log_(order) {}

    // Gamma(x + sigma e) and its reciprocal, sigma = +1 or -1
    void mul_gamma(const Rational& x, int sigma);
    void div_gamma(const Rational& x, int sigma);
    // (x + sigma e) and its reciprocal
    void mul_linear(const Rational& x, int sigma);
    void div_linear(const Rational& x, int sigma);
    void mul_constant(const HElement& c) { c_ = c_ * c; }

    long valuation() const { return v_; }
    const HElement& constant() const { return c_; }
    // Coefficients of exp(sum l_k e^k) through e^{order-1} (constant excluded).
    std::vector<HElement> exp_series() const;
    std::size_t order() const { return order_; }

private:
    void add_log(const std::vector<HElement>& l, int sign);
    std::size_t order_;
    long v_ = 0;
    HElement c_{1};
    std::vector<HElement> log_;
};

}  // namespace hyperasym
