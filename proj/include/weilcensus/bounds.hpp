#ifndef WEILCENSUS_BOUNDS_HPP
#define WEILCENSUS_BOUNDS_HPP

#include "weilcensus/common.hpp"
#include "weilcensus/polynomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace weilcensus {

// --- points on the unit circle ----------------------------------------------

/// Points e^{i theta}; all moduli are exactly 1 because only angles are stored.
struct UnitCirclePoints {
  std::vector<long double> angles;
};

/// prod_{i<j} |a_i - a_j|.
long double pair_product(const UnitCirclePoints& points);
long double log_pair_product(const UnitCirclePoints& points);

/// The m-th roots of unity.
UnitCirclePoints roots_of_unity(int m);

struct CircleSearchResult {
  int m = 0;
  UnitCirclePoints best;
  long double product = 0;
  int starts = 0;
};

/// Multi-start gradient ascent of log prod |a_i - a_j| over angles. Start k is
/// seeded with seed ^ k, so the result does not depend on `workers`.
CircleSearchResult lemma31_max_search(int m, std::uint64_t seed = 0, int starts = 8, unsigned workers = 1);

// --- discriminant leading coefficient ----------------------------------------

/// Coefficient of X^{2g} in disc F(prefix, X), by exact interpolation through
/// 2g + 2 points. Throws std::logic_error if the data have degree above 2g.
Integer disc_leading_coeff(const Integer& p, int g, const std::vector<Integer>& prefix);

// --- sublevel sets -------------------------------------------------------------

struct SublevelMeasure {
  long double window_lo = 0, window_hi = 0;
  long double threshold = 0;
  long double estimate = 0;
  /// Outer bound: a per-cell Lipschitz enclosure around each cell midpoint.
  long double upper_bound = 0;
  long double cell_width = 0;
  std::uint64_t cells = 0;
};

/// Half-width 2 p^{g/2} / g of the default window.
long double sublevel_window(const Integer& p, int g);

/// Measure of {x in window : |f(x)| <= p^{g^2 (1 - eps)}}. Coefficients are
/// low-to-high. A non-positive half_width selects the default window.
SublevelMeasure sublevel_measure(const std::vector<long double>& coeffs, const Integer& p, int g,
                                 const Rational& eps, std::uint64_t grid = 100000, long double half_width = 0);
SublevelMeasure sublevel_measure(const IntPolynomial& f, const Integer& p, int g, const Rational& eps,
                                 std::uint64_t grid = 100000, long double half_width = 0);

/// 2 (W/2)^n T_n(x / W): the monic polynomial of least sup norm on [-W, W].
std::vector<long double> scaled_chebyshev(int n, long double half_width);

/// prod (x - r_i) with r_i uniform in [-W, W].
std::vector<long double> random_rooted_monic(int n, long double half_width, std::uint64_t seed);

// --- partition bounds -----------------------------------------------------------

/// w(a) = sum_{lambda in P(a)} t^{a - len(lambda)} = sum_k P(a, k) t^{a-k}, for a <= amax.
std::vector<Integer> partition_length_weights(const Integer& t, unsigned amax);

/// g(l, n, b): sum over compositions a_1 + ... + a_n = b of prod w(a_i).
Integer bound_g(const Integer& ell, unsigned n, unsigned b);

/// f(l, n, delta, d) = l^{n(n-1) delta / 2} sum_{0 <= b <= delta n / d} g(l^d, n, b).
Integer bound_f(const Integer& ell, unsigned n, unsigned delta, unsigned d);

struct Prop31Finding {
  std::int64_t ell;
  unsigned n, delta;
  std::string inequality;
  Integer lhs, rhs;
};

struct Prop31Report {
  std::uint64_t case1_checked = 0;      // n >= 2, l^{n-1} >= 64
  std::uint64_t case2_checked = 0;      // n = 1
  std::uint64_t out_of_hypothesis = 0;  // n >= 2, l^{n-1} < 64
  std::vector<Prop31Finding> violations;
  /// f(l,n,delta,1) <= l^{n(n+1) delta / 2} 2^{3 delta n}, for n >= 2. Reported only.
  std::uint64_t intermediate_checked = 0;
  std::vector<Prop31Finding> intermediate_failures;
};

/// Primes l <= lmax, 1 <= n <= nmax, 1 <= delta <= dmax.
Prop31Report prop31_grid_check(std::int64_t lmax, unsigned nmax, unsigned dmax, unsigned workers = 1);

struct HardyRamanujanScan {
  unsigned mmax = 0;
  Rational C;
  long double M = 0;
  unsigned argmax_M = 0;
  bool M_tail_decreasing = false;
  long double N = 0;  // over 1 <= m <= mmax; 0 if mmax = 0
  unsigned argmax_N = 0;
  bool N_tail_decreasing = false;
};

/// M = max P(m) / 2^{m/4} and N = max m P(m) / 2^{(C-1) m / 2}.
HardyRamanujanScan hardy_ramanujan_scan(unsigned mmax, const Rational& C);

/// Nearest long double to an exact integer (top 64 bits, then scaled).
long double to_long_double(const Integer& x);

// --- transfinite diameter ---------------------------------------------------------

struct FeketeConfiguration {
  int n = 0;
  std::vector<long double> points;  // ascending, endpoints 0 and 1
  long double log_product = 0;      // log prod_{i<j} (x_j - x_i)
  long double product_value = 0;
  long double diameter = 0;         // product^{2 / (n (n - 1))}
  int sweeps = 0;
};

inline constexpr int kMaxFeketePoints = 60;

/// Coordinate-wise Newton ascent from Chebyshev-Lobatto nodes, until no
/// coordinate moves by more than 1e-12.
FeketeConfiguration fekete_diameter(int n);

// --- Stark ingredients ------------------------------------------------------------

struct StarkRecord {
  std::int64_t a;
  std::int64_t D;
  std::int64_t d_K;
  std::int64_t c;
  int mu;  // |mu_E|
  bool mu_ok;
  Rational euler_lower;  // prod_{l | D} (1 - 1/l)^{#primes above l}
  Rational euler_exact;  // prod_{l | D} prod_{P | l} (1 - 1/N(P))
  bool euler_ok;
};

struct StarkReport {
  std::int64_t p = 0;
  std::vector<StarkRecord> records;
  bool all_ok = false;
};

StarkReport stark_ingredient_checks(std::int64_t p);

// --- exponent bookkeeping ----------------------------------------------------------

struct ExponentAudit {
  std::vector<std::pair<std::string, Rational>> components;
  Rational total;
  bool each_used_once = false;
};

ExponentAudit exponent_audit();

}  // namespace weilcensus

#endif
