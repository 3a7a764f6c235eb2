#include "hyperasym/numerics/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace hyperasym {

Rational bernoulli(unsigned long n)
{
    static std::mutex g_mutex;
    static std::vector<mpq_class> g_table{mpq_class(1)};
    std::lock_guard lock(g_mutex);
    while (g_table.size() <= n) {
        unsigned long m = g_table.size();
        if (m > 1 && m % 2 == 1) {
            g_table.emplace_back(0);
            continue;
        }
        // sum_{k=0}^{m} C(m+1,k) B_k = 0
        mpq_class s(0);
        for (unsigned long k = 0; k < m; ++k) {
            if (g_table[k] == 0)
                continue;
            s += mpq_class(binomial(m + 1, k)) * g_table[k];
        }
        mpq_class b = -s / mpq_class(m + 1);
        b.canonicalize();
        g_table.push_back(b);
    }
    return Rational(g_table[n]);
}

}  // namespace hyperasym
