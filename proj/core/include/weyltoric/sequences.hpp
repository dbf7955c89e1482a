#pragma once

#include <utility>
#include <vector>

#include "weyltoric/bigint.hpp"
#include "weyltoric/family.hpp"

namespace weyltoric {

// Euler zigzag numbers a_n (EGF sec x + tan x) and Springer numbers b_n
// (EGF 1/(cos x - sin x)), exactly. Negative indices return 0, matching the
// vanishing convention used by the closed-form Betti expressions.
BigInt euler_zigzag(int n);
BigInt springer(int n);

// Tables a_0..a_n / b_0..b_n in one pass.
std::vector<BigInt> euler_zigzag_table(int n_max);
std::vector<BigInt> springer_table(int n_max);

// s_m = 2^m - 1 and t_m = (m-2)2^{m-1} + 1; at m = 0 the t-expression is
// evaluated as an exact rational, giving t_0 = 0.
std::pair<BigInt, BigInt> aux_sequences(int m);

// Binomial coefficient, 0 outside 0 <= k <= n.
BigInt binomial(long n, long k);

// r-th rational Betti number of the real toric variety of the named family's
// Weyl-chamber fan. Throws std::invalid_argument if n is below the family's
// minimum rank or r < 0.
BigInt betti_closed_form(Family family, int n, int r);

// Full row beta^0..beta^{r_max} with trailing zeros trimmed (beta^0 = 1 kept).
std::vector<BigInt> betti_closed_form_row(Family family, int n);

// Alternating sum of the row.
BigInt euler_char_closed_form(Family family, int n);

}  // namespace weyltoric
