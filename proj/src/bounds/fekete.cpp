#include "weilcensus/bounds.hpp"

#include <cmath>
#include <numbers>

namespace weilcensus {

FeketeConfiguration fekete_diameter(int n) {
  if (n < 2 || n > kMaxFeketePoints)
    throw DomainError("fekete_diameter supports 2 <= n <= " + std::to_string(kMaxFeketePoints));
  const long double pi = std::numbers::pi_v<long double>;
  FeketeConfiguration cfg;
  cfg.n = n;
  auto& x = cfg.points;
  x.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) x[k] = (1 - std::cos(pi * k / (n - 1))) / 2;
  x.front() = 0;
  x.back() = 1;

  // Interior point i maximizes sum_j log|x_i - x_j|, strictly concave on
  // (x_{i-1}, x_{i+1}); the endpoints of an optimum sit at 0 and 1.
  for (int sweep = 0; sweep < 200000; ++sweep) {
    long double moved = 0;
    for (int i = 1; i + 1 < n; ++i) {
      long double xi = x[i];
      const long double lo = x[i - 1], hi = x[i + 1];
      for (int it = 0; it < 50; ++it) {
        long double d1 = 0, d2 = 0;
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          const long double r = 1 / (xi - x[j]);
          d1 += r;
          d2 -= r * r;
        }
        long double next = xi - d1 / d2;
        // stay inside the cell
        if (!(next > lo) || !(next < hi)) next = d1 > 0 ? (xi + hi) / 2 : (xi + lo) / 2;
        const long double step = std::fabs(next - xi);
        xi = next;
        if (step < 1e-15L) break;
      }
      moved = std::max(moved, std::fabs(xi - x[i]));
      x[i] = xi;
    }
    cfg.sweeps = sweep + 1;
    if (moved < 1e-12L) break;
  }

  long double logp = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) logp += std::log(x[j] - x[i]);
  cfg.log_product = logp;
  cfg.product_value = std::exp(logp);
  cfg.diameter = std::exp(2 * logp / (static_cast<long double>(n) * (n - 1)));
  return cfg;
}

}  // namespace weilcensus
