#ifndef WEILCENSUS_SRC_MODPOLY_HPP
#define WEILCENSUS_SRC_MODPOLY_HPP

// Polynomials over F_q for word-sized primes q; internal to the arith module.

#include "weilcensus/common.hpp"
#include "weilcensus/polynomial.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace weilcensus::modp {

using Poly = std::vector<std::uint64_t>;  // low degree first, trimmed

struct Field {
  std::uint64_t q;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % q; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + q - b) % q; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % q);
  }
  std::uint64_t inv(std::uint64_t a) const;
};

int degree(const Poly& a);
void trim(Poly& a);

Poly reduce(const IntPolynomial& f, const Field& F);
Poly add(const Poly& a, const Poly& b, const Field& F);
Poly sub(const Poly& a, const Poly& b, const Field& F);
Poly mul(const Poly& a, const Poly& b, const Field& F);
Poly scale(const Poly& a, std::uint64_t c, const Field& F);
void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem, const Field& F);
Poly mod(const Poly& a, const Poly& b, const Field& F);
Poly monic(const Poly& a, const Field& F);
Poly gcd(Poly a, Poly b, const Field& F);
/// s*a + t*b = gcd (monic).
Poly ext_gcd(const Poly& a, const Poly& b, Poly& s, Poly& t, const Field& F);
Poly powmod(const Poly& base, const Integer& e, const Poly& m, const Field& F);

/// Distinct-degree factorization of a monic squarefree polynomial:
/// pairs (d, product of all irreducible factors of degree d).
std::vector<std::pair<int, Poly>> distinct_degree(const Poly& f, const Field& F);

/// Splits a product of irreducibles of degree d (q odd).
void equal_degree(const Poly& f, int d, const Field& F, std::mt19937_64& rng, std::vector<Poly>& out);

/// Complete factorization of a monic squarefree polynomial into monic irreducibles.
std::vector<Poly> factor_squarefree(const Poly& f, const Field& F, std::uint64_t seed);

}  // namespace weilcensus::modp

#endif
