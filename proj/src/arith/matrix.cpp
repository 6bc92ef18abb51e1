#include "weilcensus/matrix.hpp"

#include <algorithm>
#include <utility>

namespace weilcensus {

Integer determinant(IntMatrix m) {
  if (!m.square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign > 0 ? Integer(m(n - 1, n - 1)) : Integer(-m(n - 1, n - 1));
}

Rational determinant(RatMatrix m) {
  if (!m.square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(piv, c));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

std::vector<Rational> solve_left(const RatMatrix& a, const std::vector<Rational>& b) {
  // x A = b  <=>  A^T x^T = b^T
  const std::size_t n = a.rows();
  if (!a.square() || b.size() != n) throw DomainError("solve_left: dimension mismatch");
  RatMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(j, i);
    aug(i, n) = b[i];
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && aug(piv, k) == 0) ++piv;
    if (piv == n) throw DomainError("solve_left: singular matrix");
    if (piv != k)
      for (std::size_t c = 0; c <= n; ++c) std::swap(aug(k, c), aug(piv, c));
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || aug(i, k) == 0) continue;
      Rational f = aug(i, k) / aug(k, k);
      for (std::size_t j = k; j <= n; ++j) aug(i, j) -= f * aug(k, j);
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n) / aug(i, i);
  return x;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// Moves the smallest nonzero entry of the trailing block to (t, t).
bool place_min_pivot(IntMatrix& m, std::size_t t) {
  const std::size_t n = m.rows();
  bool found = false;
  std::size_t br = t, bc = t;
  Integer best;
  for (std::size_t i = t; i < n; ++i)
    for (std::size_t j = t; j < n; ++j) {
      if (m(i, j) == 0) continue;
      Integer a = abs(m(i, j));
      if (!found || a < best) {
        best = a;
        br = i;
        bc = j;
        found = true;
      }
    }
  if (!found) return false;
  swap_rows(m, t, br);
  swap_cols(m, t, bc);
  return true;
}

}  // namespace

std::vector<Integer> smith_elementary_divisors(IntMatrix m) {
  if (!m.square()) throw DomainError("Smith form requires a square matrix");
  const std::size_t n = m.rows();
  std::vector<Integer> divisors(n, Integer(0));
  for (std::size_t t = 0; t < n; ++t) {
    if (!place_min_pivot(m, t)) break;
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (m(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t c = t; c < n; ++c) m(i, c) -= q * m(t, c);
        if (m(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (m(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t r = t; r < n; ++r) m(r, j) -= q * m(r, t);
        if (m(t, j) != 0) dirty = true;
      }
      if (dirty) {
        place_min_pivot(m, t);
        continue;
      }
      // Row and column are clear; enforce the divisibility chain.
      bool fixed = false;
      for (std::size_t i = t + 1; i < n && !fixed; ++i)
        for (std::size_t j = t + 1; j < n && !fixed; ++j)
          if (!mpz_divisible_p(m(i, j).get_mpz_t(), m(t, t).get_mpz_t())) {
            for (std::size_t c = t; c < n; ++c) m(t, c) += m(i, c);
            fixed = true;
          }
      if (!fixed) break;
    }
    divisors[t] = abs(m(t, t));
  }
  return divisors;
}

}  // namespace weilcensus
