#include "weilcensus/bounds.hpp"

#include <cmath>
#include <random>

namespace weilcensus {

namespace {

long double horner(const std::vector<long double>& c, long double x) {
  long double v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

/// Upper bound for |f'| on [-r, r].
long double derivative_bound(const std::vector<long double>& c, long double r) {
  long double v = 0;
  for (std::size_t k = c.size(); k-- > 1;) v = v * r + static_cast<long double>(k) * std::fabs(c[k]);
  return v;
}

}  // namespace

long double sublevel_window(const Integer& p, int g) {
  return 2 * std::pow(static_cast<long double>(p.get_d()), static_cast<long double>(g) / 2) / g;
}

SublevelMeasure sublevel_measure(const std::vector<long double>& coeffs, const Integer& p, int g,
                                 const Rational& eps, std::uint64_t grid, long double half_width) {
  if (g < 1) throw DomainError("g must be positive");
  if (grid < 1) throw DomainError("grid must be positive");
  if (coeffs.empty()) throw DomainError("zero polynomial");
  const long double W = half_width > 0 ? half_width : sublevel_window(p, g);
  const long double e = static_cast<long double>(g) * g * (1 - static_cast<long double>(eps.get_d()));
  const long double T = std::pow(static_cast<long double>(p.get_d()), e);
  const long double h = 2 * W / static_cast<long double>(grid);
  auto excess = [&](long double x) { return std::fabs(horner(coeffs, x)) - T; };

  SublevelMeasure out;
  out.window_lo = -W;
  out.window_hi = W;
  out.threshold = T;
  out.cell_width = h;
  out.cells = grid;

  long double estimate = 0, upper = 0;
  long double x0 = -W, e0 = excess(x0);
  for (std::uint64_t i = 0; i < grid; ++i) {
    const long double x1 = i + 1 == grid ? W : -W + h * static_cast<long double>(i + 1);
    const long double e1 = excess(x1);
    if (e0 <= 0 && e1 <= 0) {
      estimate += x1 - x0;
    } else if ((e0 <= 0) != (e1 <= 0)) {
      // one boundary crossing assumed inside the cell; locate it by bisection
      long double a = x0, b = x1;
      const bool left_inside = e0 <= 0;
      for (int it = 0; it < 80; ++it) {
        const long double m = (a + b) / 2;
        if ((excess(m) <= 0) == left_inside) a = m;
        else b = m;
      }
      estimate += left_inside ? (a - x0) : (x1 - a);
    }
    // Outer enclosure: |f(x)| >= |f(mid)| - L |x - mid| on the cell.
    const long double mid = (x0 + x1) / 2;
    const long double em = excess(mid);
    const long double width = x1 - x0;
    if (em <= 0) {
      upper += width;
    } else {
      const long double L = derivative_bound(coeffs, std::max(std::fabs(x0), std::fabs(x1))) * (1 + 1e-15L);
      const long double r = L > 0 ? em / L : width;
      upper += std::max<long double>(0, width - 2 * std::min(r, width / 2));
    }
    x0 = x1;
    e0 = e1;
  }
  out.estimate = estimate;
  out.upper_bound = upper;
  return out;
}

SublevelMeasure sublevel_measure(const IntPolynomial& f, const Integer& p, int g, const Rational& eps,
                                 std::uint64_t grid, long double half_width) {
  if (!f.is_monic() || f.degree() != 2 * g) throw DomainError("expected a monic polynomial of degree 2g");
  std::vector<long double> c;
  for (const auto& x : f.coeffs()) c.push_back(to_long_double(x));
  return sublevel_measure(c, p, g, eps, grid, half_width);
}

std::vector<long double> scaled_chebyshev(int n, long double half_width) {
  if (n < 1) throw DomainError("degree must be positive");
  // T_{k+1}(y) = 2y T_k(y) - T_{k-1}(y), in the variable y = x / W
  std::vector<long double> tm1{1}, t{0, 1};
  for (int k = 1; k < n; ++k) {
    std::vector<long double> next(t.size() + 1, 0);
    for (std::size_t i = 0; i < t.size(); ++i) next[i + 1] += 2 * t[i];
    for (std::size_t i = 0; i < tm1.size(); ++i) next[i] -= tm1[i];
    tm1 = std::move(t);
    t = std::move(next);
  }
  // substitute y = x / W and scale by 2 (W/2)^n
  const long double scale = 2 * std::pow(half_width / 2, static_cast<long double>(n));
  std::vector<long double> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    out[i] = t[i] * scale / std::pow(half_width, static_cast<long double>(i));
  out.back() = 1;
  return out;
}

std::vector<long double> random_rooted_monic(int n, long double half_width, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<long double> c{1};
  for (int k = 0; k < n; ++k) {
    const long double r = half_width * static_cast<long double>(unif(rng));
    std::vector<long double> next(c.size() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return c;
}

}  // namespace weilcensus
