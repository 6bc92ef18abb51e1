#include "doctest.h"

#include "support/oracles.hpp"
#include "weilcensus/orders.hpp"
#include "weilcensus/weil.hpp"

#include <complex>

using namespace weilcensus;

namespace {

// disc(R) = det(sigma_k(b_i))^2 evaluated at numeric roots.
long double numeric_order_disc(const OrderDescription& order) {
  const auto roots = oracle::numeric_roots(order.defining_poly);
  const std::size_t n = roots.size();
  std::vector<std::vector<oracle::cld>> m(n, std::vector<oracle::cld>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      oracle::cld acc = 0, pw = 1;
      for (std::size_t l = 0; l < n; ++l) {
        acc += static_cast<long double>(order.basis(i, l).get_d()) * pw;
        pw *= roots[k];
      }
      m[i][k] = acc;
    }
  oracle::cld det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const oracle::cld k = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= k * m[c][j];
    }
  }
  return (det * det).real();
}

void check_order_invariants(const OrderDescription& R) {
  CHECK(discriminant(R.defining_poly) == R.index_over_Zpi * R.index_over_Zpi * R.disc);
  CHECK(ring_closed(R));
  const long double num = numeric_order_disc(R);
  const long double exact = oracle::to_ld(R.disc);
  CHECK(std::fabs(num - exact) <= 1e-6L * std::max(1.0L, std::fabs(exact)));
}

}  // namespace

TEST_CASE("build_R examples") {
  {
    auto R = build_R(IntPolynomial{5, 3, 1}, 5);
    CHECK(R.index_over_Zpi == 1);
    CHECK(R.disc == -11);
    // pibar = -3 - pi
    CHECK(R.basis(1, 0) == -3);
    CHECK(R.basis(1, 1) == -1);
    check_order_invariants(R);
  }
  {
    auto R = build_R(IntPolynomial{9, 0, 1, 0, 1}, 3);
    CHECK(R.index_over_Zpi == 3);
    CHECK(R.disc == 19600);
    CHECK(discriminant(R.defining_poly) == 176400);
    // pibar = -(pi^3 + pi)/3, pibar^2 = -(pi^2 + 1)
    CHECK(R.basis(2, 1) == Rational(-1, 3));
    CHECK(R.basis(2, 3) == Rational(-1, 3));
    CHECK(R.basis(3, 0) == -1);
    CHECK(R.basis(3, 2) == -1);
    check_order_invariants(R);
    CHECK(lemma41_check(R.defining_poly, 3));
  }
  {
    auto R = build_R(IntPolynomial{9, 0, 0, 0, 1}, 3);
    CHECK(R.index_over_Zpi * R.index_over_Zpi <= 9);
    check_order_invariants(R);
    CHECK(lemma41_check(R.defining_poly, 3));
  }
}

TEST_CASE("build_R preconditions") {
  // x^4 - 2x^2 + 49 = (x^2 + 4x + 7)(x^2 - 4x + 7)
  CHECK_THROWS_AS(build_R(IntPolynomial{49, 0, -2, 0, 1}, 7), DomainError);
  // irreducible but not Weil
  CHECK_THROWS_AS(build_R(IntPolynomial{5, 7, 1}, 5), DomainError);
  CHECK_THROWS_AS(build_R(IntPolynomial{5, 1, 1, 1}, 5), DomainError);
}

TEST_CASE("build_R invariants over Y_g^sim") {
  for (auto [p, g] : std::vector<std::pair<long, int>>{{3, 2}, {7, 2}, {2, 3}, {3, 3}}) {
    WeilParams params(p, g);
    YgEnumerator en(params);
    std::size_t simple = 0;
    en.for_each(0, en.count_within(100000), [&](std::uint64_t, const CoefficientVector& a) {
      auto cand = make_candidate(params, a);
      if (!cand.is_simple_ordinary) return;
      ++simple;
      auto R = build_R(cand.F, p);
      check_order_invariants(R);
      CHECK(lemma41_holds(R, p));
    });
    CHECK(simple > 0);
  }
}

TEST_CASE("build_Rplus and lemma 4.9") {
  auto r1 = build_Rplus(IntPolynomial{5, 3, 1}, 5);
  CHECK(r1.h == IntPolynomial{3, 1});
  CHECK(r1.disc == 1);
  auto r2 = build_Rplus(IntPolynomial{9, 0, 1, 0, 1}, 3);
  CHECK(r2.h == IntPolynomial{-5, 0, 1});
  CHECK(r2.disc == 20);
  auto r3 = build_Rplus(IntPolynomial{9, 0, 0, 0, 1}, 3);
  CHECK(r3.h == IntPolynomial{-6, 0, 1});
  CHECK(r3.disc == 24);
  CHECK(lemma49_check(IntPolynomial{9, 0, 1, 0, 1}, 3));
  CHECK(lemma49_check(IntPolynomial{5, 1, 1}, 5));
  CHECK_THROWS_AS(build_Rplus(IntPolynomial{5, 1, 2, 1, 1}, 5), DomainError);

  // Weil polynomials all have h with roots in [-2 sqrt p, 2 sqrt p].
  for (auto [p, g] : std::vector<std::pair<long, int>>{{5, 2}, {3, 3}}) {
    WeilParams params(p, g);
    YgEnumerator en(params);
    en.for_each(0, en.count_within(100000), [&](std::uint64_t, const CoefficientVector& a) {
      auto rp = build_Rplus(build_F(params, a), p);
      CHECK(rp.disc == discriminant(rp.h));
      CHECK(lemma49_holds(rp, p));
    });
  }
}

TEST_CASE("quadratic_decompose") {
  CHECK(quadratic_decompose(-27) == std::pair<std::int64_t, std::int64_t>{-3, 3});
  CHECK(quadratic_decompose(-16) == std::pair<std::int64_t, std::int64_t>{-4, 2});
  CHECK(quadratic_decompose(-11) == std::pair<std::int64_t, std::int64_t>{-11, 1});
  CHECK(quadratic_decompose(-3) == std::pair<std::int64_t, std::int64_t>{-3, 1});
  CHECK(quadratic_decompose(-4) == std::pair<std::int64_t, std::int64_t>{-4, 1});
  CHECK(quadratic_decompose(-72) == std::pair<std::int64_t, std::int64_t>{-8, 3});
  CHECK(quadratic_decompose(-300) == std::pair<std::int64_t, std::int64_t>{-3, 10});
  CHECK_THROWS_AS(quadratic_decompose(5), DomainError);
  CHECK_THROWS_AS(quadratic_decompose(0), DomainError);
  CHECK_THROWS_AS(quadratic_decompose(-5), DomainError);
  CHECK_THROWS_AS(quadratic_decompose(-6), DomainError);
  for (std::int64_t D = -3; D >= -5000; --D) {
    if (!is_quadratic_discriminant(D)) continue;
    auto [dK, c] = quadratic_decompose(D);
    CHECK(c * c * dK == D);
    CHECK(is_fundamental_discriminant(dK));
  }
}

TEST_CASE("class numbers") {
  CHECK(class_number_form_count(-4) == 1);
  CHECK(class_number_form_count(-23) == 3);
  CHECK(class_number_form_count(-27) == 1);
  CHECK(class_number_conductor_formula(-3, 3) == 1);
  CHECK(class_number_conductor_formula(-4, 2) == 1);
  CHECK(class_number_conductor_formula(-11, 1) == 1);
  // Well-known values of h(d) for fundamental d < 0.
  const std::vector<std::pair<std::int64_t, std::int64_t>> table = {
      {-3, 1}, {-4, 1}, {-7, 1}, {-8, 1}, {-11, 1}, {-15, 2}, {-19, 1}, {-20, 2}, {-23, 3}, {-24, 2},
      {-47, 5}, {-71, 7}, {-84, 4}, {-163, 1}, {-199, 9}, {-3299, 27}, {-4027, 9}};
  for (auto [d, h] : table) {
    CAPTURE(d);
    CHECK(class_number_form_count(d) == h);
    CHECK(fundamental_class_number(d) == h);
  }
  CHECK_THROWS_AS(fundamental_class_number(-12), DomainError);
  CHECK_THROWS_AS(class_number_form_count(-6), DomainError);
}

TEST_CASE("class number routes agree for |D| <= 10^5") {
  std::size_t checked = 0;
  for (std::int64_t D = -3; D >= -100000; --D) {
    if (!is_quadratic_discriminant(D)) continue;
    auto [dK, c] = quadratic_decompose(D);
    const auto a = class_number_form_count(D);
    const auto b = class_number_conductor_formula(dK, c);
    if (a != b) {
      CAPTURE(D);
      CHECK(a == b);
    }
    ++checked;
  }
  CHECK(checked == 50000);
}

TEST_CASE("orders_between") {
  auto o = orders_between(-27);
  REQUIRE(o.size() == 2);
  CHECK(o[0] == QuadraticOrder{-3, -3, 1, 1});
  CHECK(o[1] == QuadraticOrder{-27, -3, 3, 1});
  o = orders_between(-16);
  REQUIRE(o.size() == 2);
  CHECK(o[0].c == 1);
  CHECK(o[1].c == 2);
  CHECK(o[1].class_number == 1);
  o = orders_between(-19);
  REQUIRE(o.size() == 1);
  CHECK(o[0].class_number == 1);
  CHECK_THROWS_AS(orders_between(7), DomainError);
  CHECK_THROWS_AS(orders_between(5, 0), DomainError);
  CHECK_THROWS_AS(orders_between(5, 5), DomainError);
  CHECK(orders_between(7, 1).size() == 2);
}
