#ifndef WEILCENSUS_POLYNOMIAL_HPP
#define WEILCENSUS_POLYNOMIAL_HPP

#include "weilcensus/common.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace weilcensus {

/// Dense univariate polynomial over the integers; coefficient i multiplies x^i.
/// The coefficient vector is kept trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial monomial(const Integer& c, int degree);
  static IntPolynomial constant(const Integer& c) { return monomial(c, 0); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  /// Coefficient of x^i; zero past the degree.
  const Integer& operator[](int i) const;
  const Integer& leading() const;
  std::span<const Integer> coeffs() const { return coeffs_; }

  /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
  Integer content() const;
  IntPolynomial derivative() const;

  Integer eval(const Integer& x) const;
  Rational eval(const Rational& x) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const Integer& c);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const Integer& c) { return a *= c; }
  friend IntPolynomial operator*(const Integer& c, IntPolynomial a) { return a *= c; }
  IntPolynomial operator-() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Exact quotient by an integer; throws if some coefficient is not divisible.
  IntPolynomial divexact(const Integer& c) const;

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

IntPolynomial pow(const IntPolynomial& f, unsigned e);

/// Polynomial over the rationals; same storage conventions as IntPolynomial.
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rational> coeffs);
  explicit RatPolynomial(const IntPolynomial& f);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Rational& operator[](int i) const;
  const Rational& leading() const;
  std::span<const Rational> coeffs() const { return coeffs_; }

  Rational eval(const Rational& x) const;
  RatPolynomial derivative() const;

  friend RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(const Rational& c, const RatPolynomial& a);
  friend bool operator==(const RatPolynomial&, const RatPolynomial&) = default;

  /// Euclidean division: *this = q * d + r with deg r < deg d.
  void divmod(const RatPolynomial& d, RatPolynomial& q, RatPolynomial& r) const;
  RatPolynomial monic() const;

  /// Positive rational multiple with coprime integer coefficients.
  IntPolynomial primitive_part() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd over the rationals.
RatPolynomial gcd(RatPolynomial a, RatPolynomial b);

/// Exact division over Z; returns false if g does not divide f in Z[x].
bool divides_over_Z(const IntPolynomial& g, const IntPolynomial& f, IntPolynomial* quotient = nullptr);

}  // namespace weilcensus

#endif
