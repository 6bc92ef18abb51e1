#include "weilcensus/arith.hpp"

namespace weilcensus {

std::vector<Integer> partition_counts(unsigned m) {
  std::vector<Integer> p(m + 1);
  p[0] = 1;
  for (unsigned n = 1; n <= m; ++n) {
    Integer acc = 0;
    for (long k = 1;; ++k) {
      const long g1 = k * (3 * k - 1) / 2;
      if (g1 > static_cast<long>(n)) break;
      const bool plus = (k % 2) == 1;
      const long g2 = k * (3 * k + 1) / 2;
      if (plus) {
        acc += p[n - static_cast<unsigned>(g1)];
        if (g2 <= static_cast<long>(n)) acc += p[n - static_cast<unsigned>(g2)];
      } else {
        acc -= p[n - static_cast<unsigned>(g1)];
        if (g2 <= static_cast<long>(n)) acc -= p[n - static_cast<unsigned>(g2)];
      }
    }
    p[n] = acc;
  }
  return p;
}

Integer partition_count(unsigned m) { return partition_counts(m)[m]; }

std::vector<std::vector<Integer>> partition_parts_table(unsigned mmax) {
  std::vector<std::vector<Integer>> t(mmax + 1);
  for (unsigned m = 0; m <= mmax; ++m) t[m].assign(m + 1, Integer(0));
  t[0][0] = 1;
  for (unsigned m = 1; m <= mmax; ++m)
    for (unsigned k = 1; k <= m; ++k) {
      // P(m,k) = P(m-1,k-1) + P(m-k,k)
      Integer v = t[m - 1][k - 1];
      if (m - k >= k) v += t[m - k][k];
      t[m][k] = v;
    }
  return t;
}

Integer partition_count_parts(unsigned m, unsigned k) {
  if (k > m) return 0;
  return partition_parts_table(m)[m][k];
}

}  // namespace weilcensus
