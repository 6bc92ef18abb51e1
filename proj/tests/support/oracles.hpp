#ifndef WEILCENSUS_TESTS_ORACLES_HPP
#define WEILCENSUS_TESTS_ORACLES_HPP

// Independent reference computations used only by the tests.

#include "weilcensus/polynomial.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using cld = std::complex<long double>;

inline long double to_ld(const weilcensus::Integer& v) { return std::stold(v.get_str()); }

/// All complex roots of f by Durand-Kerner iteration.
inline std::vector<cld> numeric_roots(const weilcensus::IntPolynomial& f) {
  const int n = f.degree();
  std::vector<cld> c(static_cast<std::size_t>(n) + 1);
  const long double lc = to_ld(f.leading());
  for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = to_ld(f[i]) / lc;
  auto eval = [&](cld z) {
    cld acc = 0;
    for (int i = n; i >= 0; --i) acc = acc * z + c[static_cast<std::size_t>(i)];
    return acc;
  };
  std::vector<cld> z(static_cast<std::size_t>(n));
  const cld seed(0.4L, 0.9L);
  long double radius = 1;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[static_cast<std::size_t>(i)]) + 1);
  for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = std::pow(seed, i) * radius;
  for (int it = 0; it < 5000; ++it) {
    long double delta = 0;
    for (int i = 0; i < n; ++i) {
      cld denom = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) denom *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
      cld step = eval(z[static_cast<std::size_t>(i)]) / denom;
      z[static_cast<std::size_t>(i)] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-30L) break;
  }
  // Newton polish
  for (auto& r : z)
    for (int it = 0; it < 5; ++it) {
      cld fv = 0, dv = 0;
      for (int i = n; i >= 0; --i) {
        dv = dv * r + fv;
        fv = fv * r + c[static_cast<std::size_t>(i)];
      }
      if (std::abs(dv) > 0) r -= fv / dv;
    }
  return z;
}

/// Monic random polynomial with coefficients in [-bound, bound].
inline weilcensus::IntPolynomial random_monic(std::mt19937_64& rng, int degree, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  std::vector<weilcensus::Integer> c(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i < degree; ++i) c[static_cast<std::size_t>(i)] = d(rng);
  c.back() = 1;
  return weilcensus::IntPolynomial(std::move(c));
}

/// Exhaustive search for a monic factor of degree 1 or 2 of a monic integer
/// polynomial of degree <= 5. Returns true if f is reducible.
inline bool brute_force_reducible_monic(const weilcensus::IntPolynomial& f) {
  using weilcensus::Integer;
  const int n = f.degree();
  if (n <= 1) return false;
  const long c0 = f[0].get_si();
  long cauchy = 0;
  for (int i = 0; i < n; ++i) cauchy = std::max(cauchy, static_cast<long>(std::labs(f[i].get_si())));
  cauchy += 1;
  if (c0 == 0) return true;
  std::vector<long> divisors;
  for (long d = 1; d <= std::labs(c0); ++d)
    if (c0 % d == 0) {
      divisors.push_back(d);
      divisors.push_back(-d);
    }
  for (long r : divisors)
    if (f.eval(Integer(r)) == 0) return true;
  if (n < 4) return false;
  // monic quadratic x^2 + a x + b: |b| divides c0; |a| <= 2 * root bound
  for (long b : divisors)
    for (long a = -2 * cauchy; a <= 2 * cauchy; ++a) {
      weilcensus::IntPolynomial g{b, a, 1};
      if (weilcensus::divides_over_Z(g, f)) return true;
    }
  return false;
}

/// Enumerates partitions of m with parts <= maxpart; calls visit(length).
inline void enumerate_partitions(unsigned m, unsigned maxpart, unsigned length,
                                 const std::function<void(unsigned)>& visit) {
  if (m == 0) {
    visit(length);
    return;
  }
  for (unsigned part = std::min(m, maxpart); part >= 1; --part) enumerate_partitions(m - part, part, length + 1, visit);
}

}  // namespace oracle

#endif
