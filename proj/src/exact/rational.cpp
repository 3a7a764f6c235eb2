#include "hyperasym/exact/rational.hpp"

#include <stdexcept>

namespace hyperasym {

Rational::Rational(const Integer& n, const Integer& d)
{
    if (d == 0)
        throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q)
{
    v_.canonicalize();
}

namespace {

bool parse_integer(std::string_view s, Integer& out)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    out = Integer(std::string(s), 10);
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    bool negative = false;
    if (s.starts_with("\xE2\x88\x92")) {
        negative = true;
        s.remove_prefix(3);
    } else if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    Integer n, d(1);
    auto slash = s.find('/');
    bool ok;
    if (slash == std::string_view::npos) {
        ok = parse_integer(s, n);
    } else {
        ok = parse_integer(s.substr(0, slash), n) && parse_integer(s.substr(slash + 1), d);
    }
    if (!ok)
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    if (negative)
        n = -n;
    return Rational(n, d);
}

std::string Rational::str() const
{
    return v_.get_str();
}

long Rational::to_long() const
{
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw std::range_error("rational is not a machine integer");
    return v_.get_num().get_si();
}

Integer Rational::floor() const
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

Rational Rational::frac() const
{
    return *this - Rational(floor());
}

Rational Rational::inverse() const
{
    if (is_zero())
        throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::abs() const
{
    return Rational(mpq_class(::abs(v_)));
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational pow(const Rational& base, long e)
{
    if (e < 0)
        return pow(base.inverse(), -e);
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get().get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), base.get().get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned long n, unsigned long k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace hyperasym
