#pragma once

#include "hyperasym/expansion/log_series.hpp"

#include <map>
#include <string>
#include <vector>

namespace hyperasym {

enum class Branch { Upper, Lower };

const char* branch_name(Branch b);
Branch parse_branch(const std::string& s);

// prefactor * sum_rho e^{rho lambda x} sum_series (series in x), with
// rho in {0, 1}. For domain "sector" the branch fixes the continuous range of
// arg(lambda x): (-pi/2, 3pi/2] for upper, (-3pi/2, pi/2] for lower. For
// domain "continuation" the variable is w = -z on its principal branch.
struct AsymptoticExpansion {
    std::string domain = "sector";
    Branch branch = Branch::Upper;
    CycloNumber lambda{1};
    HElement prefactor{1};
    std::size_t depth = 0;
    std::map<int, std::vector<LogSeries>> parts;

    // Adds s to parts[rho], merging with a series of equal alpha.
    void add(int rho, const LogSeries& s);
    // Removes empty series and log slices.
    void canonicalize();
    bool has_log_term() const;
    friend bool operator==(const AsymptoticExpansion& a, const AsymptoticExpansion& b);
};

// Same function with every term multiplied by the prefactor and prefactor 1.
AsymptoticExpansion absorb_prefactor(const AsymptoticExpansion& e);

// Coefficientwise product of power series.
std::vector<HElement> hadamard_star(const std::vector<HElement>& f, const std::vector<HElement>& g);

}  // namespace hyperasym
