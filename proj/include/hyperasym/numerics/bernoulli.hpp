#pragma once

#include "hyperasym/exact/rational.hpp"

namespace hyperasym {

// B_n with B_1 = -1/2; cached, thread-safe.
Rational bernoulli(unsigned long n);

}  // namespace hyperasym
