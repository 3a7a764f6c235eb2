#pragma once

#include "hyperasym/hring/element.hpp"

#include <vector>

namespace hyperasym {

// sum_i sum_{n<N} c_{i,n} x^{-n-alpha} log(1/x)^i
class LogSeries {
public:
    LogSeries() = default;
    LogSeries(Rational alpha, std::size_t depth) : alpha_(std::move(alpha)), depth_(depth) {}

    const Rational& alpha() const { return alpha_; }
    std::size_t depth() const { return depth_; }
    // Number of log powers stored (max log power + 1, or 0 when empty).
    std::size_t log_count() const { return c_.size(); }
    const HElement& coeff(std::size_t i, std::size_t n) const;
    void set(std::size_t i, std::size_t n, HElement v);
    void add(std::size_t i, std::size_t n, const HElement& v);
    bool is_zero() const;
    // Drop trailing all-zero log slices.
    void trim();
    // Same function written with leading exponent alpha - s (s >= 0).
    LogSeries realigned(const Rational& new_alpha) const;
    LogSeries truncated(std::size_t depth) const;

    LogSeries& operator+=(const LogSeries& o);
    LogSeries& operator*=(const HElement& c);
    friend LogSeries operator+(LogSeries a, const LogSeries& b) { return a += b; }
    friend LogSeries operator*(const LogSeries& a, const LogSeries& b);
    friend bool operator==(const LogSeries& a, const LogSeries& b);

private:
    Rational alpha_;
    std::size_t depth_ = 0;
    std::vector<std::vector<HElement>> c_;
};

}  // namespace hyperasym
