#include "doctest.h"

#include "support/oracles.hpp"
#include "weilcensus/arith.hpp"
#include "weilcensus/bounds.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace weilcensus;

TEST_CASE("pair products on the circle") {
  UnitCirclePoints antipodal{{0.0L, std::numbers::pi_v<long double>}};
  CHECK(pair_product(antipodal) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(std::fabs(pair_product(roots_of_unity(4)) - 16) < 1e-14L);
  for (int m = 2; m <= 12; ++m) {
    const long double target = std::pow(static_cast<long double>(m), m / 2.0L);
    CHECK(std::fabs(pair_product(roots_of_unity(m)) / target - 1) < 1e-12L);
  }
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unif(0, 2 * std::numbers::pi);
  for (int m = 2; m <= 12; ++m) {
    const long double bound = std::pow(static_cast<long double>(m), m / 2.0L) * (1 + 1e-12L);
    for (int trial = 0; trial < 500; ++trial) {
      UnitCirclePoints pts;
      for (int i = 0; i < m; ++i) pts.angles.push_back(static_cast<long double>(unif(rng)));
      CHECK(pair_product(pts) <= bound);
      CHECK(std::fabs(std::log(pair_product(pts)) - log_pair_product(pts)) < 1e-9L);
    }
  }
  CHECK_THROWS_AS(pair_product(UnitCirclePoints{{1.0L}}), DomainError);
  CHECK_THROWS_AS(roots_of_unity(1), DomainError);
}

TEST_CASE("lemma 3.1 search approaches the roots of unity") {
  for (int m = 2; m <= 12; ++m) {
    auto r = lemma31_max_search(m, 3, 6);
    const long double target = std::pow(static_cast<long double>(m), m / 2.0L);
    CAPTURE(m);
    CHECK(r.product <= target * (1 + 1e-12L));
    CHECK(r.product >= target * (1 - 1e-9L));
    for (auto a : r.best.angles) CHECK((a >= 0 && a < 2 * std::numbers::pi_v<long double>));
  }
  // the reported optimum does not depend on the worker count
  auto one = lemma31_max_search(9, 11, 8, 1);
  auto four = lemma31_max_search(9, 11, 8, 4);
  CHECK(one.product == four.product);
  CHECK(one.best.angles == four.best.angles);
}

TEST_CASE("disc leading coefficient") {
  CHECK(disc_leading_coeff(3, 2, {Integer(0)}) == 144);
  CHECK(disc_leading_coeff(2, 3, {Integer(0), Integer(0)}) == 46656);
  CHECK(disc_leading_coeff(7, 1, {}) == 1);
  std::mt19937_64 rng(1);
  for (int g = 1; g <= 3; ++g)
    for (long p : {2L, 3L, 5L, 101L}) {
      const Integer expected = ipow(Integer(g), 2ul * g) * ipow(Integer(p), static_cast<unsigned long>(g * (g - 1)));
      for (int t = 0; t < 3; ++t) {
        std::vector<Integer> prefix;
        for (int i = 1; i < g; ++i) prefix.emplace_back(static_cast<long>(rng() % 21) - 10);
        CHECK(disc_leading_coeff(p, g, prefix) == expected);
      }
    }
  CHECK_THROWS_AS(disc_leading_coeff(3, 2, {}), DomainError);
}

TEST_CASE("sublevel measure of x^{2g}") {
  for (auto [g, p, eps] : std::vector<std::tuple<int, long, Rational>>{
           {10, 2, Rational(3, 4)}, {10, 2, Rational(1, 2)}, {3, 5, Rational(1, 2)}, {2, 101, Rational(3, 4)}}) {
    std::vector<long double> c(static_cast<std::size_t>(2 * g + 1), 0);
    c.back() = 1;
    auto m = sublevel_measure(c, p, g, eps, 20000);
    const long double r = std::pow(static_cast<long double>(p), g * (1 - static_cast<long double>(eps.get_d())) / 2);
    const long double expect = 2 * std::min(r, m.window_hi);
    CAPTURE(g);
    CAPTURE(p);
    CHECK(std::fabs(m.estimate - expect) <= 2 * m.cell_width);
    CHECK(m.upper_bound >= m.estimate);
    CHECK(m.upper_bound <= expect + 2 * m.cell_width);
  }
  // window large enough to hold the whole set
  std::vector<long double> x20(21, 0);
  x20.back() = 1;
  const long double r = std::pow(2.0L, 3.75L);
  auto wide = sublevel_measure(x20, 2, 10, Rational(1, 4), 100000, 2 * r);
  CHECK(std::fabs(wide.estimate - 2 * r) <= 2 * wide.cell_width);
  // integer overload
  IntPolynomial f = IntPolynomial::monomial(1, 4);
  auto mi = sublevel_measure(f, 101, 2, Rational(3, 4), 10000);
  CHECK(std::fabs(mi.estimate - 2 * std::sqrt(101.0L) / std::sqrt(std::sqrt(101.0L))) <= 2 * mi.cell_width);
  CHECK_THROWS_AS(sublevel_measure(IntPolynomial{1, 1}, 101, 2, Rational(1, 2)), DomainError);
}

TEST_CASE("sublevel enclosure dominates a fine-grid count") {
  const long double W = sublevel_window(2, 4);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto c = random_rooted_monic(8, W, seed);
    auto coarse = sublevel_measure(c, 2, 4, Rational(1, 2), 2000);
    auto fine = sublevel_measure(c, 2, 4, Rational(1, 2), 400000);
    CHECK(coarse.upper_bound >= fine.estimate - 1e-9L);
    CHECK(std::fabs(coarse.estimate - fine.estimate) <= 4 * coarse.cell_width);
  }
  auto cheb = scaled_chebyshev(6, 2.0L);
  CHECK(cheb.back() == 1);
  // |2 (W/2)^n T_n(x/W)| <= 2 (W/2)^n on the window
  for (int i = 0; i <= 100; ++i) {
    const long double x = -2 + 4.0L * i / 100;
    long double v = 0;
    for (auto it = cheb.rbegin(); it != cheb.rend(); ++it) v = v * x + *it;
    CHECK(std::fabs(v) <= 2 * std::pow(1.0L, 6) + 1e-12L);
  }
}

TEST_CASE("partition length weights") {
  const Integer t = 3;
  const auto w = partition_length_weights(t, 25);
  for (unsigned a = 0; a <= 25; ++a) {
    Integer brute = 0;
    oracle::enumerate_partitions(a, a, 0, [&](unsigned len) { brute += ipow(t, a - len); });
    CHECK(w[a] == brute);
  }
}

TEST_CASE("bound_g and bound_f") {
  for (long l : {2L, 3L, 7L})
    for (unsigned n = 1; n <= 4; ++n) CHECK(bound_g(l, n, 0) == 1);
  CHECK(bound_f(2, 1, 1, 1) == 2);
  // brute force over compositions for small cases
  for (long l : {2L, 5L})
    for (unsigned n = 1; n <= 3; ++n)
      for (unsigned b = 0; b <= 6; ++b) {
        const auto w = partition_length_weights(l, b);
        Integer brute = 0;
        std::function<void(unsigned, unsigned, Integer)> rec = [&](unsigned slot, unsigned left, Integer prod) {
          if (slot == n) {
            if (left == 0) brute += prod;
            return;
          }
          for (unsigned a = 0; a <= left; ++a) rec(slot + 1, left - a, prod * w[a]);
        };
        rec(0, b, Integer(1));
        CHECK(bound_g(l, n, b) == brute);
      }
  for (long l : {2L, 3L, 5L})
    for (unsigned n = 1; n <= 4; ++n)
      for (unsigned delta = 1; delta <= 4; ++delta)
        for (unsigned d = 1; d <= 4; ++d) CHECK(bound_f(l, n, delta, d) <= bound_f(l, n, delta, 1));
  CHECK(bound_f(2, 7, 1, 1) <= ipow(Integer(2), 49));
  CHECK(bound_f(3, 5, 2, 1) <= ipow(Integer(3), 50));
}

TEST_CASE("prop 3.1 grid") {
  auto r = prop31_grid_check(31, 6, 6);
  CHECK(r.violations.empty());
  CHECK(r.case1_checked > 0);
  CHECK(r.case2_checked == 11 * 6);
  CHECK(r.case1_checked + r.out_of_hypothesis == 11 * 5 * 6);
  // (2, 2, 1) is outside the hypothesis l^{n-1} >= 64
  auto small = prop31_grid_check(2, 2, 1);
  CHECK(small.out_of_hypothesis == 1);
  CHECK(small.case1_checked == 0);
  CHECK(small.violations.empty());
  auto par = prop31_grid_check(31, 6, 6, 4);
  CHECK(par.case1_checked == r.case1_checked);
  CHECK(par.intermediate_failures.size() == r.intermediate_failures.size());
}

TEST_CASE("hardy-ramanujan scan") {
  CHECK(partition_count(10) == 42);
  auto s0 = hardy_ramanujan_scan(0, Rational(3));
  CHECK(s0.M == 1);
  CHECK(s0.argmax_M == 0);
  auto s10 = hardy_ramanujan_scan(10, Rational(3));
  CHECK(s10.M >= 42 / std::pow(2.0L, 2.5L) - 1e-12L);
  auto s = hardy_ramanujan_scan(100, Rational(3));
  CHECK(std::isfinite(s.N));
  CHECK(s.N_tail_decreasing);
  auto big = hardy_ramanujan_scan(300, Rational(3));
  CHECK(std::isfinite(big.M));
  CHECK(big.M_tail_decreasing);
  CHECK(big.N_tail_decreasing);
  for (unsigned m = 0; m <= 300; ++m)
    CHECK(to_long_double(partition_count(m)) <= big.M * std::pow(2.0L, m / 4.0L) * (1 + 1e-15L));
  CHECK_THROWS_AS(hardy_ramanujan_scan(1001, Rational(3)), DomainError);
  CHECK_THROWS_AS(hardy_ramanujan_scan(10, Rational(1)), DomainError);
}

TEST_CASE("to_long_double") {
  CHECK(to_long_double(Integer(0)) == 0);
  CHECK(to_long_double(Integer(-12345)) == -12345);
  const Integer big = ipow(Integer(3), 200);
  const long double v = to_long_double(big);
  CHECK(std::fabs(std::log(v) - 200 * std::log(3.0L)) < 1e-15L * 220);
  CHECK(to_long_double(ipow(Integer(2), 100)) == std::ldexp(1.0L, 100));
}

TEST_CASE("fekete diameters") {
  CHECK(fekete_diameter(2).diameter == doctest::Approx(1.0));
  CHECK(std::fabs(fekete_diameter(3).diameter - std::cbrt(0.25L)) < 1e-9L);
  auto c5 = fekete_diameter(5);
  const long double s = 0.5L * std::sqrt(3.0L / 7.0L);
  CHECK(std::fabs(c5.points[1] - (0.5L - s)) < 1e-10L);
  CHECK(std::fabs(c5.points[2] - 0.5L) < 1e-10L);
  CHECK(std::fabs(c5.points[3] - (0.5L + s)) < 1e-10L);
  long double prev = 2;
  for (int n = 2; n <= 40; ++n) {
    auto c = fekete_diameter(n);
    CHECK(c.diameter > 0.25L);
    CHECK(c.diameter <= prev + 1e-15L);
    CHECK(std::is_sorted(c.points.begin(), c.points.end()));
    prev = c.diameter;
    if (n == 40) {
      CHECK(c.diameter > 0.25L);
      CHECK(c.diameter < 0.33L);
    }
  }
  CHECK_THROWS_AS(fekete_diameter(1), DomainError);
  CHECK_THROWS_AS(fekete_diameter(61), DomainError);
}

TEST_CASE("stark ingredients") {
  auto r5 = stark_ingredient_checks(5);
  CHECK(r5.all_ok);
  bool saw19 = false, saw4 = false;
  for (const auto& r : r5.records) {
    if (r.d_K == -19) {
      saw19 = true;
      CHECK(r.mu == 2);
      CHECK(r.euler_lower == Rational(18, 19));
    }
    if (r.d_K == -4) {
      saw4 = true;
      CHECK(r.mu == 4);
    }
  }
  CHECK(saw19);
  CHECK(saw4);
  auto r7 = stark_ingredient_checks(7);
  bool saw3 = false;
  for (const auto& r : r7.records)
    if (r.d_K == -3) {
      saw3 = true;
      CHECK(r.mu == 6);
      CHECK(r.mu_ok);
    }
  CHECK(saw3);
  for (long p : {11L, 13L, 47L, 101L}) CHECK(stark_ingredient_checks(p).all_ok);
}

TEST_CASE("exponent audit") {
  auto a = exponent_audit();
  CHECK(a.total == Rational(45, 4));
  REQUIRE(a.components.size() == 4);
  CHECK(a.components[0].second == Rational(1, 4));
  CHECK(a.components[1].second == 2);
  CHECK(a.components[2].second == 8);
  CHECK(a.components[3].second == 1);
  CHECK(a.each_used_once);
}
