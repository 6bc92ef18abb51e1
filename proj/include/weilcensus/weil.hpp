#ifndef WEILCENSUS_WEIL_HPP
#define WEILCENSUS_WEIL_HPP

#include "weilcensus/arith.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace weilcensus {

/// Prime p and dimension g, validated on construction (p prime, 1 <= g <= 8).
class WeilParams {
 public:
  WeilParams(Integer p, int g);

  const Integer& p() const { return p_; }
  int g() const { return g_; }

  friend bool operator==(const WeilParams&, const WeilParams&) = default;

 private:
  Integer p_;
  int g_;
};

constexpr int kMaxDimension = 8;

/// Coefficients (a_1, ..., a_g) of the family F(a_1, ..., a_g).
using CoefficientVector = std::vector<Integer>;

struct WeilCandidate {
  WeilParams params;
  CoefficientVector a;
  IntPolynomial F;
  bool is_weil = false;
  bool is_simple_ordinary = false;
};

/// F(a) = (x^{2g} + p^g) + a_1 (x^{2g-1} + p^{g-1} x) + ... + a_g x^g.
IntPolynomial build_F(const WeilParams& params, std::span<const Integer> a);

/// coeff(x^{g-j}) = p^j coeff(x^{g+j}) for 0 <= j <= g (f of even degree 2g).
bool has_functional_symmetry(const IntPolynomial& f, const Integer& p);

/// The monic h of degree g with f(x) = x^g h(x + p/x).
IntPolynomial real_weil_poly(const IntPolynomial& f, const Integer& p);

/// Inverse of real_weil_poly: x^g h(x + p/x) as a degree-2g polynomial.
IntPolynomial expand_real_weil_poly(const IntPolynomial& h, const Integer& p);

/// True iff every root of f has absolute value sqrt(p): the functional
/// equation holds and all roots of h are real and lie in [-2 sqrt p, 2 sqrt p].
bool is_weil(const IntPolynomial& f, const Integer& p);

/// Lexicographic enumeration of Y_g. Every coordinate ranges over a sorted
/// value set with closed-form position lookup, so the family supports random
/// access by index and can be cut into contiguous ranges for independent
/// workers.
class YgEnumerator {
 public:
  explicit YgEnumerator(const WeilParams& params);

  const WeilParams& params() const { return params_; }
  /// Exact cardinality |Y_g|.
  const Integer& count() const { return count_; }
  /// Cardinality as a machine integer; throws ResourceError beyond the budget.
  std::uint64_t count_within(std::uint64_t budget) const;

  /// Number of allowed values of coordinate i (0-based) and the value at a
  /// position within that sorted list.
  const Integer& coordinate_size(int i) const { return sizes_[static_cast<std::size_t>(i)]; }
  Integer coordinate_value(int i, const Integer& position) const;

  CoefficientVector at(std::uint64_t index) const;
  /// Visits indices [begin, end) in order.
  void for_each(std::uint64_t begin, std::uint64_t end,
                const std::function<void(std::uint64_t, const CoefficientVector&)>& visit) const;

 private:
  WeilParams params_;
  std::vector<Integer> bounds_;  // |a_i| <= bounds_[i]
  std::vector<Integer> sizes_;
  Integer count_;
};

/// Membership test for Y_g via exact squared comparisons.
bool in_Yg(const WeilParams& params, std::span<const Integer> a);

Integer count_Yg(const WeilParams& params);

/// Builds F and evaluates both flags. Simplicity is only evaluated for
/// ordinary Weil candidates; otherwise it is left false.
WeilCandidate make_candidate(const WeilParams& params, CoefficientVector a);

/// For ordinary Weil polynomials simple is equivalent to irreducible over Q.
/// Non-Weil or non-ordinary candidates are rejected.
bool is_simple_ordinary(const WeilCandidate& cand);

enum class G1Kind { kOrdinary, kSupersingular };

struct G1Class {
  std::int64_t trace;
  G1Kind kind;
};

/// Isogeny classes of elliptic curves over F_p, one record per trace a with
/// a^2 <= 4p (all such traces are admissible over a prime field).
std::vector<G1Class> classify_g1(std::int64_t p);

}  // namespace weilcensus

#endif
