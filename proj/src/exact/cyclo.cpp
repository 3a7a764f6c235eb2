#include "hyperasym/exact/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace hyperasym {

unsigned long euler_phi(unsigned long n)
{
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            result -= result / p;
        }
    }
    if (n > 1)
        result -= result / n;
    return result;
}

namespace {

std::vector<unsigned long> divisors(unsigned long n)
{
    std::vector<unsigned long> small, large;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n)
                large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

struct PhiCache {
    std::mutex mutex;
    std::map<unsigned long, std::vector<long>> table;
};

PhiCache& phi_cache()
{
    static PhiCache c;
    return c;
}

std::vector<long> compute_cyclotomic(unsigned long n)
{
    // x^n - 1 divided by Phi_d for every proper divisor d.
    std::vector<mpz_class> poly(n + 1);
    poly[0] = -1;
    poly[n] = 1;
    for (unsigned long d : divisors(n)) {
        if (d == n)
            continue;
        const auto& f = cyclotomic_polynomial(d);
        std::size_t df = f.size() - 1;
        std::size_t dp = poly.size() - 1;
        std::vector<mpz_class> q(dp - df + 1);
        for (std::size_t i = dp + 1; i-- > df;) {
            mpz_class t = poly[i];
            q[i - df] = t;
            if (t == 0)
                continue;
            for (std::size_t j = 0; j <= df; ++j)
                poly[i - df + j] -= t * f[j];
        }
        poly = std::move(q);
    }
    std::vector<long> out;
    out.reserve(poly.size());
    for (auto& c : poly) {
        if (!c.fits_slong_p())
            throw std::overflow_error("cyclotomic coefficient overflow");
        out.push_back(c.get_si());
    }
    return out;
}

using Poly = std::vector<mpq_class>;

void trim(Poly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

// Quotient and remainder of a by b (b nonzero, trimmed).
void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r)
{
    r = a;
    trim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, mpq_class(0));
    const mpq_class& lead = b.back();
    while (r.size() >= b.size()) {
        mpq_class t = r.back() / lead;
        std::size_t shift = r.size() - b.size();
        q[shift] = t;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[shift + j] -= t * b[j];
        r.pop_back();
        trim(r);
    }
}

Poly poly_mul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0)
                out[i + j] += a[i] * b[j];
    }
    return out;
}

struct TrigCache {
    std::mutex mutex;
    std::map<Rational, CycloNumber> sin, cos;
};

TrigCache& trig_cache()
{
    static TrigCache c;
    return c;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(unsigned long n)
{
    if (n == 0)
        throw std::domain_error("cyclotomic polynomial of order 0");
    {
        std::lock_guard lock(phi_cache().mutex);
        auto it = phi_cache().table.find(n);
        if (it != phi_cache().table.end())
            return it->second;
    }
    std::vector<long> poly = n == 1 ? std::vector<long>{-1, 1} : compute_cyclotomic(n);
    std::lock_guard lock(phi_cache().mutex);
    return phi_cache().table.emplace(n, std::move(poly)).first->second;
}

std::vector<mpq_class> CycloNumber::reduce(std::vector<mpq_class> poly, unsigned long n)
{
    if (poly.size() > n) {
        for (std::size_t i = n; i < poly.size(); ++i)
            if (poly[i] != 0)
                poly[i % n] += poly[i];
        poly.resize(n);
    }
    const auto& phi = cyclotomic_polynomial(n);
    std::size_t deg = phi.size() - 1;
    for (std::size_t i = poly.size(); i-- > deg;) {
        if (poly[i] == 0)
            continue;
        mpq_class t = poly[i];
        for (std::size_t j = 0; j < deg; ++j) {
            long c = phi[j];
            if (c == 0)
                continue;
            if (c == 1)
                poly[i - deg + j] -= t;
            else if (c == -1)
                poly[i - deg + j] += t;
            else
                poly[i - deg + j] -= t * c;
        }
        poly[i] = 0;
    }
    poly.resize(deg);
    return poly;
}

CycloNumber CycloNumber::root_of_unity(unsigned long n, long k)
{
    if (n == 0)
        throw std::domain_error("root of unity of order 0");
    long m = static_cast<long>(n);
    long e = ((k % m) + m) % m;
    std::vector<mpq_class> poly(static_cast<std::size_t>(e) + 1);
    poly[static_cast<std::size_t>(e)] = 1;
    return CycloNumber(n, reduce(std::move(poly), n));
}

CycloNumber CycloNumber::exp_2pi_i(const Rational& r)
{
    Rational f = r.frac();
    if (!f.den().fits_ulong_p())
        throw std::range_error("root of unity order too large");
    return root_of_unity(f.den().get_ui(), f.num().get_si());
}

CycloNumber CycloNumber::exp_i_pi(const Rational& r)
{
    return exp_2pi_i(r / Rational(2));
}

CycloNumber CycloNumber::imag_unit()
{
    return root_of_unity(4, 1);
}

CycloNumber CycloNumber::sin_pi(const Rational& r)
{
    Rational f = (r / Rational(2)).frac() * Rational(2);  // r mod 2
    {
        std::lock_guard lock(trig_cache().mutex);
        auto it = trig_cache().sin.find(f);
        if (it != trig_cache().sin.end())
            return it->second;
    }
    // (e^{i pi r} - e^{-i pi r}) / (2i)
    CycloNumber v = (exp_i_pi(f) - exp_i_pi(-f)) * imag_unit() * Rational(-1, 2);
    v = v.minimized();
    std::lock_guard lock(trig_cache().mutex);
    trig_cache().sin.emplace(f, v);
    return v;
}

CycloNumber CycloNumber::cos_pi(const Rational& r)
{
    Rational f = (r / Rational(2)).frac() * Rational(2);
    {
        std::lock_guard lock(trig_cache().mutex);
        auto it = trig_cache().cos.find(f);
        if (it != trig_cache().cos.end())
            return it->second;
    }
    CycloNumber v = (exp_i_pi(f) + exp_i_pi(-f)) * Rational(1, 2);
    v = v.minimized();
    std::lock_guard lock(trig_cache().mutex);
    trig_cache().cos.emplace(f, v);
    return v;
}

CycloNumber CycloNumber::sqrt2()
{
    return root_of_unity(8, 1) + root_of_unity(8, -1);
}

CycloNumber CycloNumber::from_coeffs(unsigned long n, const std::vector<Rational>& coeffs)
{
    if (n == 0)
        throw std::invalid_argument("conductor must be positive");
    std::vector<mpq_class> poly;
    poly.reserve(coeffs.size());
    for (const auto& c : coeffs)
        poly.push_back(c.get());
    if (poly.empty())
        poly.emplace_back(0);
    return CycloNumber(n, reduce(std::move(poly), n));
}

CycloNumber CycloNumber::parse(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    if (!s.starts_with("cyclo("))
        return CycloNumber(Rational::parse(s));
    auto close = s.find(')');
    auto open_br = s.find('[');
    if (close == std::string_view::npos || open_br != close + 1 || s.back() != ']')
        throw std::invalid_argument("malformed cyclotomic literal '" + std::string(text) + "'");
    Rational cond = Rational::parse(s.substr(6, close - 6));
    if (!cond.is_integer() || cond.sign() <= 0)
        throw std::invalid_argument("bad conductor in '" + std::string(text) + "'");
    std::string_view body = s.substr(open_br + 1, s.size() - open_br - 2);
    std::vector<Rational> coeffs;
    while (!body.empty()) {
        auto comma = body.find(',');
        coeffs.push_back(Rational::parse(body.substr(0, comma)));
        if (comma == std::string_view::npos)
            break;
        body.remove_prefix(comma + 1);
    }
    if (coeffs.empty())
        throw std::invalid_argument("empty cyclotomic literal '" + std::string(text) + "'");
    unsigned long n = cond.num().get_ui();
    if (coeffs.size() > n)
        throw std::invalid_argument("too many coefficients in '" + std::string(text) + "'");
    return from_coeffs(n, coeffs);
}

std::string CycloNumber::str() const
{
    CycloNumber m = minimized();
    if (m.n_ == 1)
        return m.c_[0].get_str();
    std::string out = "cyclo(" + std::to_string(m.n_) + ")[";
    for (std::size_t i = 0; i < m.c_.size(); ++i) {
        if (i)
            out += ',';
        out += m.c_[i].get_str();
    }
    return out + "]";
}

std::vector<Rational> CycloNumber::coeffs() const
{
    std::vector<Rational> out;
    out.reserve(c_.size());
    for (const auto& c : c_)
        out.emplace_back(c);
    return out;
}

bool CycloNumber::is_zero() const
{
    for (const auto& c : c_)
        if (c != 0)
            return false;
    return true;
}

bool CycloNumber::is_rational() const
{
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0)
            return false;
    return true;
}

bool CycloNumber::is_one() const
{
    return is_rational() && c_[0] == 1;
}

Rational CycloNumber::to_rational() const
{
    if (!is_rational())
        throw std::domain_error("cyclotomic number is not rational");
    return Rational(c_[0]);
}

CycloNumber CycloNumber::lifted(unsigned long m) const
{
    if (m == n_)
        return *this;
    if (m % n_ != 0)
        throw std::invalid_argument("lift target is not a multiple of the conductor");
    if (is_rational()) {
        std::vector<mpq_class> poly(euler_phi(m));
        poly[0] = c_[0];
        return CycloNumber(m, std::move(poly));
    }
    unsigned long f = m / n_;
    std::vector<mpq_class> poly(c_.size() * f);
    for (std::size_t i = 0; i < c_.size(); ++i)
        poly[i * f] = c_[i];
    return CycloNumber(m, reduce(std::move(poly), m));
}

CycloNumber CycloNumber::minimized() const
{
    if (n_ == 1)
        return *this;
    if (is_rational())
        return CycloNumber(Rational(c_[0]));
    std::size_t rows = c_.size();
    for (unsigned long d : divisors(n_)) {
        if (d == n_ || d % 4 == 2)
            continue;
        std::size_t cols = euler_phi(d);
        unsigned long f = n_ / d;
        // Columns are the lifts of zeta_d^i; solve for the representation.
        std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols + 1));
        for (std::size_t i = 0; i < cols; ++i) {
            auto col = root_of_unity(n_, static_cast<long>(i * f)).c_;
            for (std::size_t r = 0; r < rows; ++r)
                a[r][i] = col[r];
        }
        for (std::size_t r = 0; r < rows; ++r)
            a[r][cols] = c_[r];
        std::size_t pivot_row = 0;
        std::vector<std::size_t> pivot_col_row(cols, rows);
        for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
            std::size_t sel = pivot_row;
            while (sel < rows && a[sel][c] == 0)
                ++sel;
            if (sel == rows)
                continue;
            std::swap(a[sel], a[pivot_row]);
            mpq_class inv = 1 / a[pivot_row][c];
            for (std::size_t k = c; k <= cols; ++k)
                a[pivot_row][k] *= inv;
            for (std::size_t r = 0; r < rows; ++r) {
                if (r == pivot_row || a[r][c] == 0)
                    continue;
                mpq_class t = a[r][c];
                for (std::size_t k = c; k <= cols; ++k)
                    a[r][k] -= t * a[pivot_row][k];
            }
            pivot_col_row[c] = pivot_row++;
        }
        bool consistent = true;
        for (std::size_t r = pivot_row; r < rows && consistent; ++r)
            if (a[r][cols] != 0)
                consistent = false;
        if (!consistent)
            continue;
        std::vector<mpq_class> v(cols);
        for (std::size_t c = 0; c < cols; ++c)
            if (pivot_col_row[c] < rows)
                v[c] = a[pivot_col_row[c]][cols];
        return CycloNumber(d, std::move(v));
    }
    return *this;
}

CycloNumber CycloNumber::inverse() const
{
    if (is_zero())
        throw std::domain_error("inverse of zero cyclotomic number");
    if (is_rational())
        return CycloNumber(Rational(mpq_class(1 / c_[0])));
    const auto& phi = cyclotomic_polynomial(n_);
    Poly r0(phi.begin(), phi.end());
    Poly r1 = c_;
    trim(r1);
    Poly s0, s1{mpq_class(1)};
    while (!r1.empty()) {
        Poly q, r;
        divmod(r0, r1, q, r);
        Poly qs = poly_mul(q, s1);
        Poly ns = s0;
        if (ns.size() < qs.size())
            ns.resize(qs.size());
        for (std::size_t i = 0; i < qs.size(); ++i)
            ns[i] -= qs[i];
        trim(ns);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(ns);
    }
    // r0 is a nonzero constant: s0 * a == r0 (mod Phi).
    mpq_class g = r0[0];
    for (auto& c : s0)
        c /= g;
    return CycloNumber(n_, reduce(std::move(s0), n_));
}

CycloNumber CycloNumber::conj() const
{
    if (is_rational())
        return *this;
    std::vector<mpq_class> poly(n_);
    for (std::size_t i = 0; i < c_.size(); ++i)
        poly[(n_ - i) % n_] += c_[i];
    return CycloNumber(n_, reduce(std::move(poly), n_));
}

std::optional<Rational> CycloNumber::root_of_unity_angle() const
{
    unsigned long m = n_ % 2 == 0 ? n_ : 2 * n_;
    if (!pow(*this, static_cast<long>(m)).is_one())
        return std::nullopt;
    double re = 0, im = 0;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        double t = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_);
        re += c_[j].get_d() * std::cos(t);
        im += c_[j].get_d() * std::sin(t);
    }
    double ang = std::atan2(im, re) / (2 * std::numbers::pi);
    long k = std::lround(ang * static_cast<double>(m));
    for (long delta : {0L, 1L, -1L}) {
        long kk = k + delta;
        if (root_of_unity(m, kk) == *this)
            return Rational(Integer(((kk % static_cast<long>(m)) + static_cast<long>(m)) % static_cast<long>(m)),
                            Integer(m));
    }
    for (unsigned long kk = 0; kk < m; ++kk)
        if (root_of_unity(m, static_cast<long>(kk)) == *this)
            return Rational(Integer(kk), Integer(m));
    return std::nullopt;
}

namespace {

unsigned long lcm_ul(unsigned long a, unsigned long b)
{
    return a / std::gcd(a, b) * b;
}

}  // namespace

CycloNumber& CycloNumber::operator+=(const CycloNumber& o)
{
    if (o.is_rational()) {
        c_[0] += o.c_[0];
        return *this;
    }
    if (n_ != o.n_) {
        unsigned long m = lcm_ul(n_, o.n_);
        *this = lifted(m);
        CycloNumber b = o.lifted(m);
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] += b.c_[i];
        return *this;
    }
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] += o.c_[i];
    return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o)
{
    return *this += -o;
}

CycloNumber& CycloNumber::operator*=(const Rational& r)
{
    for (auto& c : c_)
        c *= r.get();
    return *this;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& o)
{
    if (o.is_rational()) {
        for (auto& c : c_)
            c *= o.c_[0];
        return *this;
    }
    if (is_rational()) {
        mpq_class t = c_[0];
        *this = o;
        for (auto& c : c_)
            c *= t;
        return *this;
    }
    unsigned long m = lcm_ul(n_, o.n_);
    CycloNumber a = lifted(m);
    CycloNumber b = o.lifted(m);
    *this = CycloNumber(m, reduce(poly_mul(a.c_, b.c_), m));
    if (c_.empty())
        c_.assign(euler_phi(m), mpq_class(0));
    return *this;
}

CycloNumber CycloNumber::operator-() const
{
    CycloNumber r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

bool operator==(const CycloNumber& a, const CycloNumber& b)
{
    if (a.is_rational() && b.is_rational())
        return a.c_[0] == b.c_[0];
    if (a.n_ == b.n_)
        return a.c_ == b.c_;
    unsigned long m = lcm_ul(a.n_, b.n_);
    return a.lifted(m).c_ == b.lifted(m).c_;
}

bool structural_less(const CycloNumber& a, const CycloNumber& b)
{
    if (a.n_ != b.n_)
        return a.n_ < b.n_;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        int c = cmp(a.c_[i], b.c_[i]);
        if (c != 0)
            return c < 0;
    }
    return false;
}

CycloNumber pow(const CycloNumber& x, long e)
{
    if (e < 0)
        return pow(x.inverse(), -e);
    CycloNumber result(1), base = x;
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

}  // namespace hyperasym
