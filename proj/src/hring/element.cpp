#include "hyperasym/hring/element.hpp"

#include <algorithm>

namespace hyperasym {

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const
{
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = HAtom::compare(a[i].first, b[i].first);
        if (c != 0)
            return c < 0;
        if (a[i].second != b[i].second)
            return a[i].second < b[i].second;
    }
    return a.size() < b.size();
}

namespace {

void mono_insert(Monomial& m, const HAtom& a, unsigned e)
{
    auto it = std::lower_bound(m.begin(), m.end(), a,
                               [](const std::pair<HAtom, unsigned>& x, const HAtom& y) { return x.first < y; });
    if (it != m.end() && it->first == a)
        it->second += e;
    else
        m.insert(it, {a, e});
}

unsigned mono_take(Monomial& m, const HAtom& a)
{
    for (auto it = m.begin(); it != m.end(); ++it)
        if (it->first == a) {
            unsigned e = it->second;
            m.erase(it);
            return e;
        }
    return 0;
}

// Reflection pairing and Pi/InvPi cancellation; returns the scalar factor.
CycloNumber simplify(Monomial& m)
{
    CycloNumber c(1);
    unsigned pi_gain = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const HAtom& a = m[i].first;
        if (a.kind != AtomKind::Gamma || !a.is_canonical())
            continue;
        Rational r = a.r;
        Rational rc = Rational(1) - r;
        if (rc < r)
            continue;
        if (rc == r) {
            // Gamma(1/2)^2 = Pi
            unsigned pairs = m[i].second / 2;
            if (pairs == 0)
                continue;
            m[i].second -= 2 * pairs;
            pi_gain += pairs;
            continue;
        }
        auto partner = std::find_if(m.begin(), m.end(), [&](const auto& x) {
            return x.first.kind == AtomKind::Gamma && x.first.r == rc;
        });
        if (partner == m.end())
            continue;
        unsigned pairs = std::min(m[i].second, partner->second);
        m[i].second -= pairs;
        partner->second -= pairs;
        pi_gain += pairs;
        c *= pow(CycloNumber::sin_pi(r).inverse(), static_cast<long>(pairs));
    }
    m.erase(std::remove_if(m.begin(), m.end(), [](const auto& x) { return x.second == 0; }), m.end());
    if (pi_gain > 0)
        mono_insert(m, HAtom::pi(), pi_gain);
    unsigned p = mono_take(m, HAtom::pi());
    unsigned q = mono_take(m, HAtom::inv_pi());
    if (p > q)
        mono_insert(m, HAtom::pi(), p - q);
    else if (q > p)
        mono_insert(m, HAtom::inv_pi(), q - p);
    return c;
}

}  // namespace

HElement::HElement(const CycloNumber& c)
{
    if (!c.is_zero())
        terms_.emplace(Monomial{}, c);
}

HElement HElement::atom(const HAtom& a, unsigned e)
{
    HElement x;
    if (e == 0)
        return HElement(1);
    return monomial(Monomial{{a, e}}, CycloNumber(1));
}

HElement HElement::monomial(const Monomial& m, const CycloNumber& c)
{
    Monomial mm;
    for (const auto& [a, e] : m)
        if (e > 0)
            mono_insert(mm, a, e);
    CycloNumber k = c * simplify(mm);
    HElement x;
    x.add_term(mm, k);
    return x;
}

std::optional<CycloNumber> HElement::as_scalar() const
{
    if (terms_.empty())
        return CycloNumber(0);
    if (terms_.size() == 1 && terms_.begin()->first.empty())
        return terms_.begin()->second;
    return std::nullopt;
}

void HElement::add_term(const Monomial& m, const CycloNumber& c)
{
    if (c.is_zero())
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

HElement& HElement::operator+=(const HElement& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

HElement& HElement::operator-=(const HElement& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

HElement operator*(const HElement& a, const HElement& b)
{
    HElement out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            for (const auto& [atom, e] : mb)
                mono_insert(m, atom, e);
            CycloNumber k = ca * cb;
            if (!ma.empty() && !mb.empty())
                k *= simplify(m);
            out.add_term(m, k);
        }
    }
    return out;
}

HElement& HElement::operator*=(const HElement& o)
{
    *this = *this * o;
    return *this;
}

HElement& HElement::operator*=(const CycloNumber& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, k] : terms_)
        k *= c;
    return *this;
}

HElement HElement::operator-() const
{
    HElement out = *this;
    for (auto& [m, k] : out.terms_)
        k = -k;
    return out;
}

bool operator==(const HElement& a, const HElement& b)
{
    if (a.terms_.size() != b.terms_.size())
        return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
        if (MonomialLess()(ia->first, ib->first) || MonomialLess()(ib->first, ia->first))
            return false;
        if (!(ia->second == ib->second))
            return false;
    }
    return true;
}

HElement pow(const HElement& x, unsigned e)
{
    HElement r(1), b = x;
    while (e > 0) {
        if (e & 1)
            r *= b;
        e >>= 1;
        if (e)
            b *= b;
    }
    return r;
}

std::string monomial_str(const Monomial& m)
{
    std::string out;
    for (const auto& [a, e] : m) {
        if (!out.empty())
            out += "*";
        out += a.str();
        if (e > 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

std::string HElement::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str();
        bool neg = false;
        if (c.is_rational() && c.to_rational().sign() < 0) {
            neg = true;
            cs = (-c).str();
        }
        std::string body;
        if (m.empty())
            body = cs;
        else if (c.is_rational() && (neg ? (-c).is_one() : c.is_one()))
            body = monomial_str(m);
        else
            body = cs + "*" + monomial_str(m);
        if (out.empty())
            out = neg ? "-" + body : body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

}  // namespace hyperasym
