#pragma once

#include "hyperasym/exact/cyclo.hpp"
#include "hyperasym/exact/rational.hpp"

#include <vector>

namespace hyperasym {

// Dense univariate polynomial, lowest degree first, no trailing zeros.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(T c) { if (!is_zero_value(c)) c_.push_back(std::move(c)); }
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    // x + shift
    static Polynomial linear(const T& shift) { return Polynomial(std::vector<T>{shift, T(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const { return c_; }
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }

    template <class U>
    U operator()(const U& x) const
    {
        U acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc *= x;
            acc += U(c_[i]);
        }
        return acc;
    }

    // p(x + s)
    Polynomial shifted(const T& s) const
    {
        std::vector<T> out = c_;
        for (std::size_t i = 0; i + 1 < out.size(); ++i) {
            for (std::size_t j = out.size() - 1; j > i; --j) {
                T t = out[j];
                t *= s;
                out[j - 1] += t;
            }
        }
        return Polynomial(std::move(out));
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (c_.size() < o.c_.size())
            c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o)
    {
        if (c_.size() < o.c_.size())
            c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.c_.empty() || b.c_.empty())
            return {};
        std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                T t = a.c_[i];
                t *= b.c_[j];
                out[i + j] += t;
            }
        return Polynomial(std::move(out));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

private:
    static bool is_zero_value(const T& v) { return v == T(0); }
    void trim()
    {
        while (!c_.empty() && is_zero_value(c_.back()))
            c_.pop_back();
    }
    std::vector<T> c_;
};

}  // namespace hyperasym
