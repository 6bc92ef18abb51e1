#include "weilcensus/bounds.hpp"

#include "weilcensus/arith.hpp"
#include "weilcensus/parallel.hpp"

#include <cmath>

namespace weilcensus {

namespace {

/// Coefficients 0..B of (sum_a w(a) X^a)^n.
std::vector<Integer> composition_power(const std::vector<Integer>& w, unsigned n, unsigned B) {
  std::vector<Integer> acc(B + 1, Integer(0));
  acc[0] = 1;
  for (unsigned r = 0; r < n; ++r) {
    std::vector<Integer> next(B + 1, Integer(0));
    for (unsigned i = 0; i <= B; ++i) {
      if (acc[i] == 0) continue;
      for (unsigned j = 0; i + j <= B; ++j) next[i + j] += acc[i] * w[j];
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

std::vector<Integer> partition_length_weights(const Integer& t, unsigned amax) {
  const auto table = partition_parts_table(amax);
  std::vector<Integer> w(amax + 1);
  w[0] = 1;
  for (unsigned a = 1; a <= amax; ++a) {
    Integer sum = 0;
    for (unsigned k = 1; k <= a; ++k) sum += table[a][k] * ipow(t, a - k);
    w[a] = sum;
  }
  return w;
}

Integer bound_g(const Integer& ell, unsigned n, unsigned b) {
  if (n == 0) throw DomainError("bound_g needs n >= 1");
  return composition_power(partition_length_weights(ell, b), n, b)[b];
}

Integer bound_f(const Integer& ell, unsigned n, unsigned delta, unsigned d) {
  if (n == 0 || delta == 0 || d == 0) throw DomainError("bound_f needs n, delta, d >= 1");
  const unsigned B = delta * n / d;
  const auto g = composition_power(partition_length_weights(ipow(ell, d), B), n, B);
  Integer sum = 0;
  for (const auto& x : g) sum += x;
  return ipow(ell, n * (n - 1) / 2 * delta) * sum;
}

Prop31Report prop31_grid_check(std::int64_t lmax, unsigned nmax, unsigned dmax, unsigned workers) {
  std::vector<std::int64_t> primes;
  for (std::int64_t l = 2; l <= lmax; ++l)
    if (is_prime_u64(static_cast<std::uint64_t>(l))) primes.push_back(l);
  const auto P = partition_counts(dmax);

  std::vector<Prop31Report> parts(primes.size());
  run_tasks(primes.size(), workers, [&](std::uint64_t i) {
    const std::int64_t l = primes[i];
    const Integer L(static_cast<long>(l));
    auto& r = parts[i];
    for (unsigned n = 1; n <= nmax; ++n)
      for (unsigned delta = 1; delta <= dmax; ++delta) {
        const Integer f = bound_f(L, n, delta, 1);
        if (n == 1) {
          ++r.case2_checked;
          const Integer rhs = Integer(delta) * P[delta] * ipow(L, delta);
          if (f > rhs) r.violations.push_back({l, n, delta, "f(l,1,delta,1) <= delta P(delta) l^delta", f, rhs});
          continue;
        }
        ++r.intermediate_checked;
        const Integer mid = ipow(L, n * (n + 1) / 2 * delta) * ipow(Integer(2), 3 * delta * n);
        if (f > mid)
          r.intermediate_failures.push_back({l, n, delta, "f(l,n,delta,1) <= l^{n(n+1)delta/2} 2^{3 delta n}", f, mid});
        if (ipow(L, n - 1) < 64) {
          ++r.out_of_hypothesis;
          continue;
        }
        ++r.case1_checked;
        const Integer rhs = ipow(L, n * n * delta);
        if (f > rhs) r.violations.push_back({l, n, delta, "f(l,n,delta,1) <= l^{n^2 delta}", f, rhs});
      }
  });

  Prop31Report out;
  for (auto& r : parts) {
    out.case1_checked += r.case1_checked;
    out.case2_checked += r.case2_checked;
    out.out_of_hypothesis += r.out_of_hypothesis;
    out.intermediate_checked += r.intermediate_checked;
    for (auto& v : r.violations) out.violations.push_back(std::move(v));
    for (auto& v : r.intermediate_failures) out.intermediate_failures.push_back(std::move(v));
  }
  return out;
}

long double to_long_double(const Integer& x) {
  if (x == 0) return 0;
  const bool neg = x < 0;
  Integer a = abs(x);
  const std::size_t bits = mpz_sizeinbase(a.get_mpz_t(), 2);
  long shift = 0;
  if (bits > 64) {
    shift = static_cast<long>(bits - 64);
    mpz_fdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  }
  // a < 2^64 now; assemble from two 32-bit halves to stay portable
  Integer hi = a >> 32;
  Integer lo = a - (hi << 32);
  const long double v = std::ldexp(static_cast<long double>(hi.get_ui()), 32) + static_cast<long double>(lo.get_ui());
  const long double r = std::ldexp(v, static_cast<int>(shift));
  return neg ? -r : r;
}

HardyRamanujanScan hardy_ramanujan_scan(unsigned mmax, const Rational& C) {
  if (mmax > 1000) throw DomainError("hardy_ramanujan_scan supports mmax <= 1000");
  if (C <= 1) throw DomainError("C must exceed 1");
  const auto P = partition_counts(mmax);
  const long double c = static_cast<long double>(C.get_d());
  // ratios in log space to keep 2^{(C-1) m / 2} finite
  std::vector<long double> rm(mmax + 1), rn(mmax + 1, 0);
  for (unsigned m = 0; m <= mmax; ++m) {
    const long double lp = std::log(to_long_double(P[m]));
    rm[m] = lp - std::log(2.0L) * m / 4;
    if (m >= 1) rn[m] = std::log(static_cast<long double>(m)) + lp - std::log(2.0L) * (c - 1) * m / 2;
  }
  HardyRamanujanScan s;
  s.mmax = mmax;
  s.C = C;
  for (unsigned m = 1; m <= mmax; ++m)
    if (rm[m] > rm[s.argmax_M]) s.argmax_M = m;
  s.M = std::exp(rm[s.argmax_M]);
  s.M_tail_decreasing = true;
  for (unsigned m = s.argmax_M + 1; m <= mmax; ++m)
    if (!(rm[m] < rm[m - 1])) s.M_tail_decreasing = false;
  if (mmax >= 1) {
    s.argmax_N = 1;
    for (unsigned m = 2; m <= mmax; ++m)
      if (rn[m] > rn[s.argmax_N]) s.argmax_N = m;
    s.N = std::exp(rn[s.argmax_N]);
    s.N_tail_decreasing = true;
    for (unsigned m = s.argmax_N + 1; m <= mmax; ++m)
      if (!(rn[m] < rn[m - 1])) s.N_tail_decreasing = false;
  } else {
    s.N_tail_decreasing = true;
  }
  return s;
}

}  // namespace weilcensus
