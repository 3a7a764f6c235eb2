#pragma once

#include "hyperasym/exact/cyclo.hpp"
#include "hyperasym/exact/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hyperasym {

// Rising factorial a(a+1)...(a+n-1).
template <class T>
T pochhammer(const T& a, unsigned long n)
{
    T r(1);
    for (unsigned long k = 0; k < n; ++k)
        r *= a + T(static_cast<long>(k));
    return r;
}

struct ParamGroup {
    Rational representative;           // smallest member
    std::vector<unsigned long> offsets;  // member - representative, sorted
    unsigned long multiplicity() const { return offsets.size(); }
};

// Partition by equality mod Z; groups ordered by representative.
std::vector<ParamGroup> group_parameters(const std::vector<Rational>& a);

struct HyperParams {
    std::vector<Rational> a;
    std::vector<Rational> b;
    CycloNumber lambda{1};

    std::size_t p() const { return a.size(); }
    std::size_t q() const { return b.size(); }
    void validate() const;  // throws on b_j in Z_{<=0}
    bool is_polynomial() const;
    std::string str() const;
};

Rational nu(const HyperParams& params);

struct GalochkinVerdict {
    bool is_E_function = false;
    std::vector<std::pair<CycloNumber, CycloNumber>> pairing;
    std::string reason;
};

GalochkinVerdict galochkin_classify(const std::vector<CycloNumber>& a, const std::vector<CycloNumber>& b);

}  // namespace hyperasym
