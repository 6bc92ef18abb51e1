#ifndef WEILCENSUS_CENSUS_HPP
#define WEILCENSUS_CENSUS_HPP

#include "weilcensus/common.hpp"
#include "weilcensus/weil.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace weilcensus {

/// Source of class numbers h(D). An empty provider means "compute directly".
using ClassNumberProvider = std::function<std::int64_t(std::int64_t D)>;

/// Number of F_p-isomorphism classes of elliptic curves with ordinary trace a,
/// as the sum of h(B) over the orders Z[pi] <= B <= O_K.
std::int64_t isogeny_class_size_g1(std::int64_t p, std::int64_t a);
std::int64_t isogeny_class_size_g1(std::int64_t p, std::int64_t a, const ClassNumberProvider& h);

struct BruteForceCensus {
  std::int64_t p = 0;
  std::map<std::int64_t, std::int64_t> classes_by_trace;
  /// Sum of orbit sizes; must equal p^2 - p (the nonsingular (A, B) pairs).
  std::int64_t curve_equations = 0;
  std::int64_t total_classes = 0;
};

/// Orbits of y^2 = x^3 + Ax + B under (A, B) -> (u^4 A, u^6 B), with traces
/// from direct point counting. Parallel over ranges of A.
BruteForceCensus brute_force_curve_census(std::int64_t p, unsigned workers = 1);

struct IsogenyClassG1 {
  std::int64_t p;
  std::int64_t a;
  std::int64_t D_pi;
  G1Kind kind;
  std::optional<std::int64_t> size_classnumber;  // ordinary only
  std::int64_t size_bruteforce;

  bool matches() const { return !size_classnumber || *size_classnumber == size_bruteforce; }
};

struct CensusReport {
  std::int64_t p = 0;
  std::vector<IsogenyClassG1> classes;
  std::int64_t total_classes = 0;      // B(p, 1)
  std::int64_t m_p1 = 0;               // from classify_g1
  std::int64_t traces_observed = 0;    // distinct traces in the brute-force census
  std::int64_t curve_equations = 0;
  bool all_match = false;
  bool m_p1_matches = false;
  bool mass_ok = false;
};

CensusReport census_compare(std::int64_t p, unsigned workers = 1, const ClassNumberProvider& h = {});

// --- density statistics for g >= 2 ----------------------------------------

/// epsilon = u/v with v dividing 4 and u > 0.
Rational parse_epsilon(const std::string& text);

struct DensityReport {
  std::int64_t p = 0;
  int g = 0;
  Rational eps;
  std::uint64_t y_count = 0;
  std::uint64_t y_sim = 0;
  std::uint64_t s_count = 0;
  std::uint64_t s_sim = 0;
  std::uint64_t t_sim = 0;
  Rational s_density;      // |S| / |Y|
  Rational s_sim_density;  // |S^sim| / |Y|
  Rational t_sim_density;  // |T^sim| / |Y|
  /// S^sim <= S <= Y, T^sim <= Y^sim, and S^sim <= T^sim (via the index bound).
  bool inclusions_hold = false;
};

inline constexpr std::uint64_t kDensityBudget = 10'000'000;

/// S: |disc F(a)| >= g^{2g} p^{2g^2 - g - g^2 eps}.
/// T: a simple and |disc R_a| >= g^{2g} p^{g^2 (1 - eps)}.
/// Membership is decided with integer powers after raising both sides to the
/// denominator of eps.
DensityReport density_report(std::int64_t p, int g, const Rational& eps, unsigned workers = 1);

struct DensitySweep {
  std::vector<DensityReport> reports;  // in the order of the requested eps values
  bool monotone = false;               // S_eps' <= S_eps whenever eps' <= eps
};

DensitySweep density_sweep(std::int64_t p, int g, const std::vector<Rational>& eps, unsigned workers = 1);

// --- lower-bound summation ---------------------------------------------------

struct LowerBoundTerm {
  std::int64_t a;
  std::int64_t D;
  std::int64_t h;
};

struct LowerBoundReport {
  std::int64_t p = 0;
  int g = 0;
  // g = 1
  std::vector<LowerBoundTerm> terms;
  std::int64_t class_number_sum = 0;
  // g >= 2
  std::uint64_t y_count = 0;
  std::uint64_t y_sim = 0;
  Integer disc_min, disc_median, disc_max;  // of |disc R_a| over Y_g^sim; lower median
  Rational eps;
  Rational t_sim_density;
};

/// g = 1: sum of h(a^2 - 4p) over ordinary traces. g in {2, 3}: statistics of
/// |disc R_a| over Y_g^sim and the T density at `eps`.
LowerBoundReport lower_bound_report(std::int64_t p, int g, unsigned workers = 1,
                                    const ClassNumberProvider& h = {}, const Rational& eps = Rational(1, 2));

}  // namespace weilcensus

#endif
