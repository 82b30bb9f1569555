#include "qseries/partitions.hpp"

namespace qs {

PowerSeries a_c_series(long long colors, long long trunc,
                       const CoefficientRing& ring) {
  if (colors < 1) {
    throw std::invalid_argument("color count must be at least 1, got " +
                                std::to_string(colors));
  }
  EtaQuotient quotient({{1, -1}, {2, -(colors - 1)}});
  return expand(quotient, trunc, ring);
}

PowerSeries b_series(long long trunc, const CoefficientRing& ring) {
  EtaQuotient quotient({{1, -1}, {2, 3}});
  return expand(quotient, trunc, ring);
}

std::vector<Integer> a_c_oracle_table(long long colors, long long n_max) {
  if (colors < 1) {
    throw std::invalid_argument("color count must be at least 1, got " +
                                std::to_string(colors));
  }
  if (n_max < 0) {
    throw std::invalid_argument("n must be nonnegative, got " +
                                std::to_string(n_max));
  }
  std::vector<Integer> ways(static_cast<std::size_t>(n_max) + 1);
  ways[0] = 1;
  // Unbounded knapsack: admit parts of size k one kind at a time, so after
  // processing size k the table counts multisets of parts <= k.  Even sizes
  // contribute `colors` distinguishable kinds, hence that many passes.
  for (long long k = 1; k <= n_max; ++k) {
    const long long kinds = k % 2 == 0 ? colors : 1;
    for (long long kind = 0; kind < kinds; ++kind) {
      for (long long n = k; n <= n_max; ++n) {
        ways[static_cast<std::size_t>(n)] +=
            ways[static_cast<std::size_t>(n - k)];
      }
    }
  }
  return ways;
}

Integer a_c_oracle(long long colors, long long n) {
  return a_c_oracle_table(colors, n).back();
}

}  // namespace qs
