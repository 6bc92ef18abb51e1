#ifndef WEILCENSUS_ARITH_HPP
#define WEILCENSUS_ARITH_HPP

#include "weilcensus/common.hpp"
#include "weilcensus/matrix.hpp"
#include "weilcensus/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace weilcensus {

/// Sylvester matrix of f (degree m) and g (degree n), size (m+n) x (m+n).
IntMatrix sylvester_matrix(const IntPolynomial& f, const IntPolynomial& g);

/// Res(f, g) = det of the Sylvester matrix. Res(x^2-1, x^2+1) = 4.
Integer resultant(const IntPolynomial& f, const IntPolynomial& g);

/// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f). Degree-1 polynomials give 1.
Integer discriminant(const IntPolynomial& f);

/// Irreducibility over Q for primitive f of degree 1..16.
///
/// Squarefreeness is decided by the discriminant. Distinct-degree
/// factorizations modulo several good primes give admissible factor degrees;
/// when their intersection leaves a proper factor degree open, the
/// factorization modulo the best prime is Hensel-lifted past the Mignotte
/// bound and all factor subsets are tried over Z.
bool irreducible_over_Q(const IntPolynomial& f);

constexpr int kMaxIrreducibilityDegree = 16;

/// Sturm chain of a squarefree polynomial. Each remainder is stored as a
/// positive multiple of the true remainder with coprime integer coefficients,
/// which leaves sign variations unchanged.
class SturmChain {
 public:
  explicit SturmChain(const IntPolynomial& f);

  const std::vector<IntPolynomial>& polynomials() const { return chain_; }

  /// Sign variations at a rational point (zeros skipped).
  int variations(const Rational& x) const;
  /// Sign variations at c * sqrt(d), d > 0, evaluated exactly in Q(sqrt d).
  int variations_at_sqrt(const Rational& c, const Integer& d) const;
  /// Sign variations at +infinity / -infinity.
  int variations_at_infinity(bool positive) const;

 private:
  std::vector<IntPolynomial> chain_;
};

/// Sign of P(c * sqrt(d)) computed exactly; d must be positive.
int sign_at_sqrt(const IntPolynomial& poly, const Rational& c, const Integer& d);

/// Number of distinct real roots of squarefree f in (lo, hi].
std::size_t real_roots_in_interval(const IntPolynomial& f, const Rational& lo, const Rational& hi);

/// Number of distinct real roots of squarefree f on the whole line.
std::size_t real_root_count(const IntPolynomial& f);

/// f / gcd(f, f'), made primitive with positive leading coefficient.
IntPolynomial squarefree_part(const IntPolynomial& f);

/// Number of partitions of m (Euler's pentagonal recurrence).
Integer partition_count(unsigned m);

/// P(0), ..., P(mmax).
std::vector<Integer> partition_counts(unsigned mmax);

/// Number of partitions of m into exactly k parts.
Integer partition_count_parts(unsigned m, unsigned k);

/// Table of P(m, k) for 0 <= k <= m <= mmax, indexed [m][k].
std::vector<std::vector<Integer>> partition_parts_table(unsigned mmax);

/// Newton power sums s_0..s_kmax of the roots of monic f.
std::vector<Integer> trace_power_sums(const IntPolynomial& f, std::size_t kmax);

/// Kronecker symbol (a | n) for n >= 0.
int kronecker(std::int64_t a, std::int64_t n);

}  // namespace weilcensus

#endif
