#pragma once

#include "hyperasym/exact/params.hpp"
#include "hyperasym/exact/polynomial.hpp"
#include "hyperasym/expansion/expansion.hpp"

#include <map>
#include <optional>

namespace hyperasym {

using CPoly = Polynomial<CycloNumber>;

// sum_d x^d Q_d(theta), theta = x d/dx, d >= 0.
class ThetaOperator {
public:
    ThetaOperator() = default;
    ThetaOperator(int d, CPoly q);

    // theta prod(theta + b_j - 1) - scale x prod(theta + a_j)
    static ThetaOperator hypergeometric(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                        const CycloNumber& scale);

    const std::map<int, CPoly>& terms() const { return t_; }
    int max_shift() const { return t_.empty() ? 0 : t_.rbegin()->first; }

    // e^{-r x} L e^{r x}, i.e. theta -> theta + r x.
    ThetaOperator conjugated_exp(const CycloNumber& r) const;

    ThetaOperator& operator+=(const ThetaOperator& o);
    friend ThetaOperator operator+(ThetaOperator a, const ThetaOperator& b) { return a += b; }
    friend ThetaOperator operator*(const ThetaOperator& a, const ThetaOperator& b);

    // Coefficients of L u for a power series u = sum u_m x^m, through x^{order-1}.
    template <class T>
    std::vector<T> apply_series(const std::vector<T>& u, std::size_t order) const
    {
        std::vector<T> out(order);
        for (const auto& [d, q] : t_) {
            for (std::size_t k = 0; k < u.size() && k + d < order; ++k) {
                CycloNumber c = q(CycloNumber(static_cast<long>(k)));
                if (c.is_zero())
                    continue;
                T t = u[k];
                t *= c;
                out[k + d] += t;
            }
        }
        return out;
    }

private:
    void add_term(int d, const CPoly& q);
    std::map<int, CPoly> t_;
};

struct OperatorResidual {
    bool zero = true;
    std::size_t checked = 0;  // number of coefficient slots compared
    // first nonzero slot, if any
    int rho = 0;
    Rational alpha;
    long index = 0;
    unsigned logpow = 0;
    HElement value;
};

// Applies L to every e^{rho lambda x} x^{-n-alpha} log(1/x)^i term of e (prefactor
// dropped) and checks the coefficients that are complete for depth N: indices
// m in [-d_max, N-1-d_max] relative to the smallest alpha of each class mod Z.
OperatorResidual apply_operator(const ThetaOperator& op, const AsymptoticExpansion& e);

// The pFp(lambda x) operator for domain "sector" and the p+1Fp operator in
// w = -z for domain "continuation".
OperatorResidual apply_hyp_operator(const HyperParams& params, const AsymptoticExpansion& e);

}  // namespace hyperasym
