#pragma once

#include <vector>

#include "qseries/products.hpp"
#include "qseries/series.hpp"

namespace qs {

/// Generating series of generalized cubic partitions,
/// sum_n a_c(n) q^n = 1 / (f_1 f_2^(c-1)): partitions of n whose odd parts
/// come in a single kind and whose even parts come in c kinds.  a_1(n) is
/// the unrestricted partition function p(n).  Requires colors >= 1.
PowerSeries a_c_series(long long colors, long long trunc,
                       const CoefficientRing& ring);

/// The auxiliary series sum_n b(n) q^n = f_2^3 / f_1 whose coefficient
/// shift identities drive both congruence proofs.
PowerSeries b_series(long long trunc, const CoefficientRing& ring);

/// a_c(n) counted directly by dynamic programming over part sizes (an
/// unbounded knapsack with c copies of every even size).  Independent of
/// the series engine; used to cross-check it.
Integer a_c_oracle(long long colors, long long n);

/// The whole table a_c(0), ..., a_c(n_max) from one DP pass.
std::vector<Integer> a_c_oracle_table(long long colors, long long n_max);

}  // namespace qs
