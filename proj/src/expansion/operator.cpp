#include "hyperasym/expansion/operator.hpp"

#include <algorithm>

namespace hyperasym {

ThetaOperator::ThetaOperator(int d, CPoly q)
{
    add_term(d, q);
}

void ThetaOperator::add_term(int d, const CPoly& q)
{
    if (q.is_zero())
        return;
    auto it = t_.find(d);
    if (it == t_.end()) {
        t_.emplace(d, q);
        return;
    }
    it->second += q;
    if (it->second.is_zero())
        t_.erase(it);
}

ThetaOperator& ThetaOperator::operator+=(const ThetaOperator& o)
{
    for (const auto& [d, q] : o.t_)
        add_term(d, q);
    return *this;
}

ThetaOperator operator*(const ThetaOperator& a, const ThetaOperator& b)
{
    // (x^d A(theta)) (x^e B(theta)) = x^{d+e} A(theta + e) B(theta)
    ThetaOperator out;
    for (const auto& [d, qa] : a.t_)
        for (const auto& [e, qb] : b.t_)
            out.add_term(d + e, qa.shifted(CycloNumber(e)) * qb);
    return out;
}

ThetaOperator ThetaOperator::hypergeometric(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                            const CycloNumber& scale)
{
    CPoly p0 = CPoly::linear(CycloNumber(0));
    for (const auto& x : b)
        p0 = p0 * CPoly::linear(CycloNumber(x - Rational(1)));
    CPoly p1(-scale);
    for (const auto& x : a)
        p1 = p1 * CPoly::linear(CycloNumber(x));
    ThetaOperator op(0, p0);
    op.add_term(1, p1);
    return op;
}

ThetaOperator ThetaOperator::conjugated_exp(const CycloNumber& r) const
{
    if (r.is_zero())
        return *this;
    // theta + r x
    ThetaOperator shift(0, CPoly::linear(CycloNumber(0)));
    shift.add_term(1, CPoly(r));
    ThetaOperator out;
    for (const auto& [d, q] : t_) {
        ThetaOperator acc;
        ThetaOperator pw(0, CPoly(CycloNumber(1)));
        for (int k = 0; k <= q.degree(); ++k) {
            if (!q.coeff(static_cast<std::size_t>(k)).is_zero()) {
                ThetaOperator term = pw;
                for (auto& [dd, qq] : term.t_)
                    qq = qq * CPoly(q.coeff(static_cast<std::size_t>(k)));
                acc += term;
            }
            pw = pw * shift;
        }
        ThetaOperator xd(d, CPoly(CycloNumber(1)));
        out += xd * acc;
    }
    return out;
}

namespace {

// Merge the series of one class mod Z onto the smallest alpha.
std::vector<LogSeries> merge_classes(const std::vector<LogSeries>& list)
{
    std::vector<LogSeries> out;
    std::vector<bool> used(list.size(), false);
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (used[i])
            continue;
        Rational a0 = list[i].alpha();
        std::vector<std::size_t> members;
        for (std::size_t j = i; j < list.size(); ++j)
            if (!used[j] && (list[j].alpha() - list[i].alpha()).is_integer()) {
                members.push_back(j);
                used[j] = true;
                a0 = std::min(a0, list[j].alpha());
            }
        std::size_t depth = SIZE_MAX;
        for (std::size_t j : members) {
            std::size_t shift = (list[j].alpha() - a0).num().get_ui();
            depth = std::min(depth, list[j].depth() + shift);
        }
        LogSeries merged(a0, depth);
        for (std::size_t j : members)
            merged += list[j].realigned(a0).truncated(depth);
        out.push_back(merged);
    }
    return out;
}

}  // namespace

OperatorResidual apply_operator(const ThetaOperator& base, const AsymptoticExpansion& e)
{
    OperatorResidual res;
    for (const auto& [rho, list] : e.parts) {
        CycloNumber r = e.lambda * CycloNumber(rho);
        ThetaOperator op = base.conjugated_exp(r);
        int dmax = op.max_shift();
        for (const LogSeries& s : merge_classes(list)) {
            long N = static_cast<long>(s.depth());
            long lo = -dmax, hi = N - 1 - dmax;
            if (hi < lo)
                continue;
            std::size_t L = s.log_count();
            // out[m - lo][i]
            std::vector<std::vector<HElement>> out(static_cast<std::size_t>(hi - lo + 1), std::vector<HElement>(L));
            for (const auto& [d, q] : op.terms()) {
                for (long n = 0; n < N; ++n) {
                    long m = n - d;
                    if (m < lo || m > hi)
                        continue;
                    CPoly qs = q.shifted(CycloNumber(-(Rational(n) + s.alpha())));
                    for (std::size_t i = 0; i < L; ++i) {
                        const HElement& c = s.coeff(i, static_cast<std::size_t>(n));
                        if (c.is_zero())
                            continue;
                        // (-d/dL)^j L^i = (-1)^j i!/(i-j)! L^{i-j}
                        Integer fall(1);
                        for (std::size_t j = 0; j <= i && j <= static_cast<std::size_t>(std::max(qs.degree(), 0)); ++j) {
                            if (j > 0)
                                fall *= static_cast<long>(i - j + 1);
                            CycloNumber k = qs.coeff(j);
                            if (k.is_zero())
                                continue;
                            k *= Rational(j % 2 == 0 ? fall : Integer(-fall));
                            out[static_cast<std::size_t>(m - lo)][i - j] += c * HElement(k);
                        }
                    }
                }
            }
            for (long m = lo; m <= hi; ++m)
                for (std::size_t i = 0; i < L; ++i) {
                    ++res.checked;
                    const HElement& v = out[static_cast<std::size_t>(m - lo)][i];
                    if (res.zero && !v.is_zero()) {
                        res.zero = false;
                        res.rho = rho;
                        res.alpha = s.alpha();
                        res.index = m;
                        res.logpow = static_cast<unsigned>(i);
                        res.value = v;
                    }
                }
        }
    }
    return res;
}

OperatorResidual apply_hyp_operator(const HyperParams& params, const AsymptoticExpansion& e)
{
    CycloNumber scale = e.domain == "continuation" ? CycloNumber(-1) : e.lambda;
    return apply_operator(ThetaOperator::hypergeometric(params.a, params.b, scale), e);
}

}  // namespace hyperasym
