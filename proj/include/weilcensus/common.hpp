#ifndef WEILCENSUS_COMMON_HPP
#define WEILCENSUS_COMMON_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace weilcensus {

using Integer = mpz_class;
using Rational = mpq_class;

/// Violated precondition of a mathematical operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested computation exceeds the configured enumeration budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input lies outside the range an operation supports (e.g. p < 5 for the curve oracle).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline bool fits_int64(const Integer& v) {
  static const Integer lo("-9223372036854775808");
  static const Integer hi("9223372036854775807");
  return v >= lo && v <= hi;
}

inline std::int64_t to_int64(const Integer& v) {
  if (!fits_int64(v)) throw DomainError("integer does not fit in 64 bits: " + v.get_str());
  if (v.fits_slong_p()) return v.get_si();
  // long is 64-bit on the supported platforms; kept for completeness.
  return static_cast<std::int64_t>(std::stoll(v.get_str()));
}

inline Integer from_int64(std::int64_t v) { return Integer(static_cast<long>(v)); }

/// Deterministic Miller-Rabin, exact for every n < 2^64.
bool is_prime_u64(std::uint64_t n);

/// Primality of an arbitrary integer restricted to the 64-bit range.
bool is_prime(const Integer& n);

}  // namespace weilcensus

#endif
