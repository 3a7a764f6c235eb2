#include "hyperasym/expansion/log_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperasym {

namespace {
const HElement kZero;
}

const HElement& LogSeries::coeff(std::size_t i, std::size_t n) const
{
    if (i >= c_.size() || n >= depth_)
        return kZero;
    return c_[i][n];
}

void LogSeries::set(std::size_t i, std::size_t n, HElement v)
{
    if (n >= depth_)
        throw std::out_of_range("LogSeries index beyond depth");
    if (i >= c_.size()) {
        if (v.is_zero())
            return;
        c_.resize(i + 1, std::vector<HElement>(depth_));
    }
    c_[i][n] = std::move(v);
}

void LogSeries::add(std::size_t i, std::size_t n, const HElement& v)
{
    if (v.is_zero())
        return;
    if (n >= depth_)
        throw std::out_of_range("LogSeries index beyond depth");
    if (i >= c_.size())
        c_.resize(i + 1, std::vector<HElement>(depth_));
    c_[i][n] += v;
}

bool LogSeries::is_zero() const
{
    for (const auto& row : c_)
        for (const auto& x : row)
            if (!x.is_zero())
                return false;
    return true;
}

void LogSeries::trim()
{
    while (!c_.empty() && std::all_of(c_.back().begin(), c_.back().end(), [](const HElement& x) { return x.is_zero(); }))
        c_.pop_back();
}

LogSeries LogSeries::realigned(const Rational& new_alpha) const
{
    Rational s = alpha_ - new_alpha;
    if (!s.is_integer() || s.sign() < 0)
        throw std::invalid_argument("realigned needs alpha - new_alpha in N");
    std::size_t shift = s.num().get_ui();
    LogSeries out(new_alpha, depth_ + shift);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t n = 0; n < depth_; ++n)
            out.set(i, n + shift, c_[i][n]);
    out.trim();
    return out;
}

LogSeries LogSeries::truncated(std::size_t depth) const
{
    LogSeries out(alpha_, depth);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t n = 0; n < std::min(depth, depth_); ++n)
            out.set(i, n, c_[i][n]);
    out.trim();
    return out;
}

LogSeries& LogSeries::operator+=(const LogSeries& o)
{
    if (o.alpha_ != alpha_)
        throw std::invalid_argument("LogSeries sum needs equal leading exponents");
    if (o.depth_ < depth_)
        *this = truncated(o.depth_);
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        for (std::size_t n = 0; n < depth_; ++n)
            add(i, n, o.c_[i][n]);
    trim();
    return *this;
}

LogSeries& LogSeries::operator*=(const HElement& c)
{
    for (auto& row : c_)
        for (auto& x : row)
            if (!x.is_zero())
                x = x * c;
    trim();
    return *this;
}

LogSeries operator*(const LogSeries& a, const LogSeries& b)
{
    std::size_t depth = std::min(a.depth_, b.depth_);
    LogSeries out(a.alpha_ + b.alpha_, depth);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            for (std::size_t n = 0; n < depth; ++n) {
                if (a.c_[i][n].is_zero())
                    continue;
                for (std::size_t m = 0; n + m < depth; ++m)
                    if (!b.c_[j][m].is_zero())
                        out.add(i + j, n + m, a.c_[i][n] * b.c_[j][m]);
            }
    out.trim();
    return out;
}

bool operator==(const LogSeries& a, const LogSeries& b)
{
    if (a.alpha_ != b.alpha_ || a.depth_ != b.depth_)
        return false;
    std::size_t L = std::max(a.c_.size(), b.c_.size());
    for (std::size_t i = 0; i < L; ++i)
        for (std::size_t n = 0; n < a.depth_; ++n)
            if (!(a.coeff(i, n) == b.coeff(i, n)))
                return false;
    return true;
}

}  // namespace hyperasym
