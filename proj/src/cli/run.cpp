#include "weilcensus/cli.hpp"

#include "weilcensus/arith.hpp"
#include "weilcensus/bounds.hpp"
#include "weilcensus/census.hpp"
#include "weilcensus/orders.hpp"
#include "weilcensus/parallel.hpp"
#include "weilcensus/weil.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>

namespace weilcensus {

namespace {

struct Assertions {
  std::uint64_t passed = 0;
  Json failed = Json::array();

  void check(bool ok, const std::string& record, const std::string& what) {
    if (ok) {
      ++passed;
    } else {
      failed.push_back({{"record", record}, {"assertion", what}});
    }
  }
};

Json json_coeffs(const IntPolynomial& f) {
  Json a = Json::array();
  for (const auto& c : f.coeffs()) a.push_back(json_integer(c));
  return a;
}

Json json_vector(const CoefficientVector& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(json_integer(c));
  return a;
}

Json json_real(long double x) { return static_cast<double>(x); }

std::string vec_string(const CoefficientVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) out.push_back(cur);
  return out;
}

void require_prime(std::int64_t p, std::int64_t min) {
  if (p < min || !is_prime_u64(static_cast<std::uint64_t>(p)))
    throw UsageError("p must be prime >= " + std::to_string(min) + " (got " + std::to_string(p) + ")");
}

void require_g(int g, int lo, int hi) {
  if (g < lo || g > hi)
    throw UsageError("g must be between " + std::to_string(lo) + " and " + std::to_string(hi) +
                     " (got " + std::to_string(g) + ")");
}

// --- weil-enum ------------------------------------------------------------------

constexpr std::uint64_t kListLimit = 5000;

void weil_enum(const RunConfig& cfg, Json& params, Json& results, Assertions& as, std::ostream& table) {
  require_prime(cfg.p, 2);
  require_g(cfg.g, 1, kMaxDimension);
  params["p"] = cfg.p;
  params["g"] = cfg.g;
  WeilParams wp(cfg.p, cfg.g);
  YgEnumerator en(wp);
  const std::uint64_t total = en.count_within(kDensityBudget);

  struct Row {
    CoefficientVector a;
    IntPolynomial F;
    bool weil, symmetric, simple;
  };
  struct Part {
    std::uint64_t weil = 0, simple = 0;
    std::vector<Row> rows;
    std::vector<std::pair<std::uint64_t, std::string>> bad;
  };
  const std::uint64_t parts = std::max<std::uint64_t>(1, std::min<std::uint64_t>(total, 64));
  std::vector<Part> out(parts);
  run_tasks(parts, cfg.workers, [&](std::uint64_t k) {
    const auto [lo, hi] = split_range(total, parts, k);
    en.for_each(lo, hi, [&](std::uint64_t idx, const CoefficientVector& a) {
      auto cand = make_candidate(wp, a);
      const bool sym = has_functional_symmetry(cand.F, wp.p());
      out[k].weil += cand.is_weil;
      out[k].simple += cand.is_simple_ordinary;
      if (!cand.is_weil || !sym)
        out[k].bad.emplace_back(idx, vec_string(a) + (cand.is_weil ? " not symmetric" : " not Weil"));
      if (total <= kListLimit) out[k].rows.push_back({a, cand.F, cand.is_weil, sym, cand.is_simple_ordinary});
    });
  });

  std::uint64_t weil = 0, simple = 0;
  for (auto& part : out) {
    weil += part.weil;
    simple += part.simple;
  }
  results.push_back({{"kind", "summary"},
                     {"y_count", total},
                     {"weil_count", weil},
                     {"simple_count", simple},
                     {"simple_fraction", json_rational(total ? make_rational(Integer(static_cast<long>(simple)),
                                                                             Integer(static_cast<long>(total)))
                                                             : Rational(0))},
                     {"candidates_listed", total <= kListLimit}});
  std::uint64_t idx = 0;
  for (auto& part : out)
    for (auto& row : part.rows)
      results.push_back({{"kind", "candidate"},
                         {"index", idx++},
                         {"a", json_vector(row.a)},
                         {"F", json_coeffs(row.F)},
                         {"weil", row.weil},
                         {"symmetric", row.symmetric},
                         {"simple", row.simple}});
  std::uint64_t failures = 0;
  for (auto& part : out)
    for (auto& [i, msg] : part.bad) {
      as.check(false, "index " + std::to_string(i), "F(a) is a symmetric Weil polynomial: " + msg);
      ++failures;
    }
  as.passed += total - failures;

  table << "Y_g at p = " << cfg.p << ", g = " << cfg.g << "\n"
        << "  |Y_g|      " << total << "\n"
        << "  Weil       " << weil << "\n"
        << "  simple     " << simple << "\n";
}

// --- census ---------------------------------------------------------------------

void census(const RunConfig& cfg, ClassNumberCache& cache, Json& params, Json& results, Assertions& as,
            std::ostream& table) {
  if (cfg.p < 5 || !is_prime_u64(static_cast<std::uint64_t>(cfg.p)))
    throw UsageError("p must be prime ≥ 5 (got " + std::to_string(cfg.p) + ")");
  params["p"] = cfg.p;
  ClassNumberProvider h = [&](std::int64_t D) { return cache.get_or_compute(D); };
  const auto rep = census_compare(cfg.p, cfg.workers, h);

  table << "Elliptic curves over F_" << cfg.p << " by trace\n"
        << std::setw(6) << "a" << std::setw(8) << "D" << std::setw(14) << "kind" << std::setw(12) << "class-no."
        << std::setw(12) << "brute" << "  match\n";
  for (const auto& c : rep.classes) {
    const bool ordinary = c.kind == G1Kind::kOrdinary;
    Json rec = {{"kind", "class"},
                {"a", c.a},
                {"D_pi", c.D_pi},
                {"type", ordinary ? "ordinary" : "supersingular"},
                {"size_classnumber", c.size_classnumber ? Json(*c.size_classnumber) : Json(nullptr)},
                {"size_bruteforce", c.size_bruteforce},
                {"match", c.matches()}};
    results.push_back(rec);
    if (ordinary) as.check(c.matches(), "trace " + std::to_string(c.a), "class-number sum equals brute-force count");
    table << std::setw(6) << c.a << std::setw(8) << c.D_pi << std::setw(14) << (ordinary ? "ordinary" : "supersingular")
          << std::setw(12) << (c.size_classnumber ? std::to_string(*c.size_classnumber) : "-") << std::setw(12)
          << c.size_bruteforce << "  " << (ordinary ? (c.matches() ? "yes" : "NO") : "n/a") << "\n";
  }
  results.push_back({{"kind", "summary"},
                     {"total_classes", rep.total_classes},
                     {"m_p1", rep.m_p1},
                     {"traces_observed", rep.traces_observed},
                     {"curve_equations", rep.curve_equations}});
  as.check(rep.m_p1_matches, "summary", "classify_g1 traces equal the observed traces");
  as.check(rep.mass_ok, "summary", "orbit sizes sum to p^2 - p");
  table << "  B(p,1) = " << rep.total_classes << ", m_p(1) = " << rep.m_p1 << "\n";
}

// --- density --------------------------------------------------------------------

void density(const RunConfig& cfg, Json& params, Json& results, Assertions& as, std::ostream& table) {
  require_prime(cfg.p, 2);
  require_g(cfg.g, 2, kMaxDimension);
  std::vector<Rational> eps;
  for (const auto& e : split_commas(cfg.eps.empty() ? "1/2" : cfg.eps)) {
    try {
      eps.push_back(parse_epsilon(e));
    } catch (const DomainError& err) {
      throw UsageError(err.what());
    }
  }
  if (eps.empty()) throw UsageError("at least one epsilon is required");
  params["p"] = cfg.p;
  params["g"] = cfg.g;
  Json je = Json::array();
  for (const auto& e : eps) je.push_back(e.get_str());
  params["eps"] = je;

  const auto sw = density_sweep(cfg.p, cfg.g, eps, cfg.workers);
  table << "S/T statistics at p = " << cfg.p << ", g = " << cfg.g << "\n"
        << std::setw(8) << "eps" << std::setw(10) << "|Y|" << std::setw(10) << "|Y^sim|" << std::setw(10) << "|S|"
        << std::setw(10) << "|S^sim|" << std::setw(10) << "|T^sim|" << "\n";
  for (const auto& r : sw.reports) {
    results.push_back({{"eps", r.eps.get_str()},
                       {"y_count", r.y_count},
                       {"y_sim", r.y_sim},
                       {"s_count", r.s_count},
                       {"s_sim", r.s_sim},
                       {"t_sim", r.t_sim},
                       {"s_density", json_rational(r.s_density)},
                       {"s_sim_density", json_rational(r.s_sim_density)},
                       {"t_sim_density", json_rational(r.t_sim_density)},
                       {"inclusions_hold", r.inclusions_hold}});
    as.check(r.inclusions_hold, "eps " + r.eps.get_str(), "S^sim <= S <= Y, T^sim <= Y^sim, S^sim <= T^sim");
    table << std::setw(8) << r.eps.get_str() << std::setw(10) << r.y_count << std::setw(10) << r.y_sim << std::setw(10)
          << r.s_count << std::setw(10) << r.s_sim << std::setw(10) << r.t_sim << "\n";
  }
  if (eps.size() > 1) as.check(sw.monotone, "sweep", "S grows with eps");
}

// --- lower-bound ----------------------------------------------------------------

void lower_bound(const RunConfig& cfg, ClassNumberCache& cache, Json& params, Json& results, Assertions& as,
                 std::ostream& table) {
  require_prime(cfg.p, 2);
  require_g(cfg.g, 1, 3);
  params["p"] = cfg.p;
  params["g"] = cfg.g;
  ClassNumberProvider h = [&](std::int64_t D) { return cache.get_or_compute(D); };
  Rational eps(1, 2);
  if (cfg.g >= 2) {
    try {
      eps = parse_epsilon(cfg.eps.empty() ? "1/2" : cfg.eps);
    } catch (const DomainError& err) {
      throw UsageError(err.what());
    }
    params["eps"] = eps.get_str();
  }
  const auto r = lower_bound_report(cfg.p, cfg.g, cfg.workers, h, eps);
  if (cfg.g == 1) {
    std::int64_t sum = 0;
    table << "sum of h(a^2 - 4p) over ordinary traces, p = " << cfg.p << "\n";
    for (const auto& t : r.terms) {
      results.push_back({{"kind", "term"}, {"a", t.a}, {"D", t.D}, {"h", t.h}});
      as.check(t.h >= 1, "trace " + std::to_string(t.a), "class number is positive");
      sum += t.h;
      table << std::setw(6) << t.a << std::setw(8) << t.D << std::setw(6) << t.h << "\n";
    }
    results.push_back({{"kind", "summary"}, {"class_number_sum", r.class_number_sum}});
    as.check(sum == r.class_number_sum, "summary", "sum of terms");
    table << "  total " << r.class_number_sum << "\n";
  } else {
    results.push_back({{"kind", "summary"},
                       {"y_count", r.y_count},
                       {"y_sim", r.y_sim},
                       {"disc_R_min", json_integer(r.disc_min)},
                       {"disc_R_median", json_integer(r.disc_median)},
                       {"disc_R_max", json_integer(r.disc_max)},
                       {"eps", r.eps.get_str()},
                       {"t_sim_density", json_rational(r.t_sim_density)}});
    as.check(r.y_sim == 0 || r.disc_min > 0, "summary", "disc(R) is nonzero on Y_g^sim");
    table << "|disc R| over Y_" << cfg.g << "^sim at p = " << cfg.p << " (" << r.y_sim << " of " << r.y_count
          << ")\n  min " << r.disc_min.get_str() << "\n  median " << r.disc_median.get_str() << "\n  max "
          << r.disc_max.get_str() << "\n  T density at eps = " << r.eps.get_str() << ": "
          << r.t_sim_density.get_str() << "\n";
  }
}

// --- bounds-check ---------------------------------------------------------------

const std::vector<std::string> kChecks = {"lemma31", "cor43",   "sublevel", "prop31",
                                          "hardy-ramanujan", "fekete", "stark", "exponents"};

void check_lemma31(const RunConfig& cfg, Json& results, Assertions& as, std::ostream& table) {
  constexpr int kTrials = 10000;
  const int mlo = 2, mhi = 12;
  std::vector<long double> worst(mhi + 1, 0);
  run_tasks(mhi - mlo + 1, cfg.workers, [&](std::uint64_t k) {
    const int m = mlo + static_cast<int>(k);
    std::mt19937_64 rng(cfg.seed ^ static_cast<std::uint64_t>(m));
    std::uniform_real_distribution<double> unif(0, 2 * std::numbers::pi);
    long double best = 0;
    for (int t = 0; t < kTrials; ++t) {
      UnitCirclePoints pts;
      for (int i = 0; i < m; ++i) pts.angles.push_back(static_cast<long double>(unif(rng)));
      best = std::max(best, pair_product(pts));
    }
    worst[m] = best;
  });
  table << "circle pair products vs m^{m/2}\n";
  for (int m = mlo; m <= mhi; ++m) {
    const long double target = std::pow(static_cast<long double>(m), m / 2.0L);
    const long double roots = pair_product(roots_of_unity(m));
    const auto search = lemma31_max_search(m, cfg.seed, 8, cfg.workers);
    const std::string rec = "lemma31 m=" + std::to_string(m);
    as.check(worst[m] <= target * (1 + 1e-12L), rec, "random configurations stay below m^{m/2}");
    as.check(std::fabs(roots / target - 1) <= 1e-9L, rec, "roots of unity attain m^{m/2}");
    as.check(search.product <= target * (1 + 1e-12L), rec, "search optimum stays below m^{m/2}");
    results.push_back({{"check", "lemma31"},
                       {"m", m},
                       {"bound", json_real(target)},
                       {"random_max", json_real(worst[m])},
                       {"random_trials", kTrials},
                       {"roots_of_unity", json_real(roots)},
                       {"search_best", json_real(search.product)}});
    table << std::setw(4) << m << "  bound " << std::setw(14) << static_cast<double>(target) << "  random "
          << std::setw(14) << static_cast<double>(worst[m]) << "  search " << std::setw(14)
          << static_cast<double>(search.product) << "\n";
  }
}

void check_cor43(const RunConfig& cfg, Json& results, Assertions& as, std::ostream& table) {
  std::vector<std::pair<std::int64_t, int>> cases;
  if (cfg.p && cfg.g) {
    require_prime(cfg.p, 2);
    require_g(cfg.g, 1, kMaxDimension);
    cases.emplace_back(cfg.p, cfg.g);
  } else {
    for (int g = 1; g <= 3; ++g)
      for (std::int64_t p : {2, 3, 5, 101}) cases.emplace_back(p, g);
  }
  table << "leading coefficient of disc F in a_g\n";
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const auto [p, g] = cases[k];
    std::mt19937_64 rng(cfg.seed ^ k);
    const Integer expected = ipow(Integer(g), 2ul * static_cast<unsigned long>(g)) *
                             ipow(Integer(static_cast<long>(p)), static_cast<unsigned long>(g * (g - 1)));
    int ok = 0;
    for (int t = 0; t < 10; ++t) {
      std::vector<Integer> prefix;
      for (int i = 1; i < g; ++i) prefix.emplace_back(static_cast<long>(rng() % 41) - 20);
      const Integer got = disc_leading_coeff(p, g, prefix);
      as.check(got == expected, "cor43 p=" + std::to_string(p) + " g=" + std::to_string(g) + " prefix " + vec_string(prefix),
               "leading coefficient equals g^{2g} p^{g(g-1)}");
      ok += got == expected;
    }
    results.push_back({{"check", "cor43"}, {"p", p}, {"g", g}, {"expected", json_integer(expected)}, {"prefixes", 10},
                       {"matching", ok}});
    table << "  p=" << std::setw(4) << p << " g=" << g << "  " << expected.get_str() << "  " << ok << "/10\n";
  }
}

void check_sublevel(const RunConfig& cfg, Json& results, Assertions& as, std::ostream& table) {
  const std::int64_t p = cfg.p ? cfg.p : 2;
  const int g = cfg.g ? cfg.g : 10;
  Rational eps;
  try {
    eps = parse_epsilon(cfg.eps.empty() ? "1/4" : cfg.eps);
  } catch (const DomainError& err) {
    throw UsageError(err.what());
  }
  if (cfg.p) require_prime(cfg.p, 2);
  if (cfg.g) require_g(cfg.g, 1, kMaxDimension);
  constexpr std::uint64_t kGrid = 100000;
  const Integer P(static_cast<long>(p));
  const long double W = sublevel_window(P, g);
  const long double r = std::pow(static_cast<long double>(p), g * (1 - static_cast<long double>(eps.get_d())) / 2);
  std::vector<long double> mono(static_cast<std::size_t>(2 * g + 1), 0);
  mono.back() = 1;

  // The whole set {|x| <= r}, measured on a window that contains it.
  const auto whole = sublevel_measure(mono, P, g, eps, kGrid, std::max(W, 1.25L * r));
  const auto clipped = sublevel_measure(mono, P, g, eps, kGrid);
  const auto cheb = sublevel_measure(scaled_chebyshev(2 * g, W), P, g, eps, kGrid);
  const auto rnd = sublevel_measure(random_rooted_monic(2 * g, W, cfg.seed), P, g, eps, kGrid);
  const std::string rec = "sublevel g=" + std::to_string(g) + " p=" + std::to_string(p) + " eps=" + eps.get_str();
  as.check(std::fabs(whole.estimate - 2 * r) <= 2 * whole.cell_width, rec, "measure of {|x^{2g}| <= T} is 2 p^{g(1-eps)/2}");
  as.check(std::fabs(clipped.estimate - 2 * std::min(r, W)) <= 2 * clipped.cell_width, rec,
           "windowed measure of x^{2g} matches the clipped interval");
  auto js = [](const SublevelMeasure& m) {
    return Json{{"estimate", json_real(m.estimate)}, {"upper_bound", json_real(m.upper_bound)},
                {"window", {json_real(m.window_lo), json_real(m.window_hi)}}, {"cell_width", json_real(m.cell_width)}};
  };
  results.push_back({{"check", "sublevel"},
                     {"p", p},
                     {"g", g},
                     {"eps", eps.get_str()},
                     {"threshold", json_real(whole.threshold)},
                     {"closed_form", json_real(2 * r)},
                     {"claimed_bound", json_real(W / 2)},
                     {"monomial_whole_set", js(whole)},
                     {"monomial_in_window", js(clipped)},
                     {"chebyshev_in_window", js(cheb)},
                     {"random_in_window", js(rnd)}});
  table << "sublevel sets at g=" << g << ", p=" << p << ", eps=" << eps.get_str() << "\n"
        << "  x^{2g} whole set     " << static_cast<double>(whole.estimate) << " (closed form "
        << static_cast<double>(2 * r) << ")\n"
        << "  x^{2g} in window     " << static_cast<double>(clipped.estimate) << "\n"
        << "  Chebyshev in window  " << static_cast<double>(cheb.estimate) << "\n"
        << "  random in window     " << static_cast<double>(rnd.estimate) << "\n"
        << "  p^{g/2}/g            " << static_cast<double>(W / 2) << "\n";
}

void check_prop31(const RunConfig& cfg, Json& results, Assertions& as, std::ostream& table) {
  if (cfg.lmax < 2 || cfg.nmax < 1 || cfg.dmax < 1) throw UsageError("lmax >= 2, nmax >= 1 and dmax >= 1 required");
  if (cfg.lmax > 1000 || cfg.nmax > 12 || cfg.dmax > 12) throw UsageError("prop31 grid too large");
  const auto r = prop31_grid_check(cfg.lmax, cfg.nmax, cfg.dmax, cfg.workers);
  auto finding = [](const Prop31Finding& f) {
    return Json{{"l", f.ell}, {"n", f.n}, {"delta", f.delta}, {"inequality", f.inequality},
                {"lhs", json_integer(f.lhs)}, {"rhs", json_integer(f.rhs)}};
  };
  Json viol = Json::array(), inter = Json::array();
  for (const auto& v : r.violations) {
    viol.push_back(finding(v));
    as.check(false, "prop31 l=" + std::to_string(v.ell) + " n=" + std::to_string(v.n) + " delta=" +
                        std::to_string(v.delta), v.inequality);
  }
  for (const auto& v : r.intermediate_failures) inter.push_back(finding(v));
  as.passed += r.case1_checked + r.case2_checked - r.violations.size();
  results.push_back({{"check", "prop31"},
                     {"lmax", cfg.lmax},
                     {"nmax", cfg.nmax},
                     {"dmax", cfg.dmax},
                     {"case1_checked", r.case1_checked},
                     {"case2_checked", r.case2_checked},
                     {"out_of_hypothesis", r.out_of_hypothesis},
                     {"violations", viol},
                     {"intermediate_checked", r.intermediate_checked},
                     {"intermediate_failures", inter}});
  table << "partition bound grid l <= " << cfg.lmax << ", n <= " << cfg.nmax << ", delta <= " << cfg.dmax << "\n"
        << "  case (1) checked " << r.case1_checked << ", case (2) checked " << r.case2_checked
        << ", outside hypothesis " << r.out_of_hypothesis << "\n"
        << "  violations " << r.violations.size() << "\n"
        << "  intermediate bound failures " << r.intermediate_failures.size() << " of " << r.intermediate_checked << "\n";
}

void check_hardy_ramanujan(Json& results, Assertions& as, std::ostream& table) {
  const auto s = hardy_ramanujan_scan(300, Rational(3));
  as.check(std::isfinite(s.M) && std::isfinite(s.N), "hardy-ramanujan", "M and N are finite");
  as.check(s.M_tail_decreasing, "hardy-ramanujan", "P(m)/2^{m/4} decreases beyond its argmax");
  as.check(s.N_tail_decreasing, "hardy-ramanujan", "m P(m)/2^{(C-1)m/2} decreases beyond its argmax");
  results.push_back({{"check", "hardy-ramanujan"},
                     {"mmax", s.mmax},
                     {"C", s.C.get_str()},
                     {"M", json_real(s.M)},
                     {"argmax_M", s.argmax_M},
                     {"M_tail_decreasing", s.M_tail_decreasing},
                     {"N", json_real(s.N)},
                     {"argmax_N", s.argmax_N},
                     {"N_tail_decreasing", s.N_tail_decreasing}});
  table << "Partition growth (m <= 300, C = 3)\n  M = " << static_cast<double>(s.M) << " at m = " << s.argmax_M
        << "\n  N = " << static_cast<double>(s.N) << " at m = " << s.argmax_N << "\n";
}

void check_fekete(const RunConfig& cfg, Json& results, Assertions& as, std::ostream& table) {
  constexpr int kMax = 40;
  std::vector<FeketeConfiguration> cfgs(kMax + 1);
  run_tasks(kMax - 1, cfg.workers, [&](std::uint64_t k) { cfgs[k + 2] = fekete_diameter(static_cast<int>(k) + 2); });
  as.check(std::fabs(cfgs[2].diameter - 1) <= 1e-12L, "fekete n=2", "d_2 = 1");
  as.check(std::fabs(cfgs[3].diameter - std::cbrt(0.25L)) <= 1e-9L, "fekete n=3", "d_3 = (1/4)^{1/3}");
  Json ds = Json::array();
  table << "Transfinite diameter of [0,1]\n";
  for (int n = 2; n <= kMax; ++n) {
    ds.push_back(json_real(cfgs[n].diameter));
    as.check(cfgs[n].diameter > 0.25L, "fekete n=" + std::to_string(n), "d_n > 1/4");
    if (n > 2)
      as.check(cfgs[n].diameter <= cfgs[n - 1].diameter + 1e-15L, "fekete n=" + std::to_string(n),
               "d_n is nonincreasing");
    if (n <= 5 || n % 5 == 0) table << std::setw(4) << n << "  " << std::setprecision(12) << static_cast<double>(cfgs[n].diameter) << "\n";
  }
  as.check(cfgs[kMax].diameter > 0.25L && cfgs[kMax].diameter < 0.33L, "fekete n=40", "d_40 in (0.25, 0.33)");
  results.push_back({{"check", "fekete"}, {"n_min", 2}, {"n_max", kMax}, {"diameters", ds}});
}

void check_stark(const RunConfig& cfg, Json& results, Assertions& as, std::ostream& table) {
  const std::int64_t p = cfg.p ? cfg.p : 101;
  require_prime(p, 2);
  const auto rep = stark_ingredient_checks(p);
  table << "Stark ingredients at p = " << p << "\n";
  for (const auto& r : rep.records) {
    const std::string rec = "stark a=" + std::to_string(r.a);
    as.check(r.mu_ok, rec, "2 |mu_E| <= 32");
    as.check(r.euler_ok, rec, "splitting-type Euler product bounds the exact one from below");
    results.push_back({{"check", "stark"},
                       {"p", p},
                       {"a", r.a},
                       {"D", r.D},
                       {"d_K", r.d_K},
                       {"c", r.c},
                       {"mu", r.mu},
                       {"euler_lower", json_rational(r.euler_lower)},
                       {"euler_exact", json_rational(r.euler_exact)}});
  }
  table << "  " << rep.records.size() << " ordinary traces, all ok: " << (rep.all_ok ? "yes" : "no") << "\n";
}

void check_exponents(Json& results, Assertions& as, std::ostream& table) {
  const auto a = exponent_audit();
  Json comps = Json::array();
  for (const auto& [name, e] : a.components) comps.push_back({{"name", name}, {"exponent", e.get_str()}});
  as.check(a.total == Rational(45, 4), "exponents", "components sum to 45/4");
  as.check(a.each_used_once, "exponents", "each component counted once");
  results.push_back({{"check", "exponents"}, {"components", comps}, {"total", a.total.get_str()}});
  table << "Exponent audit: total " << a.total.get_str() << "\n";
}

void bounds_check(const RunConfig& cfg, Json& params, Json& results, Assertions& as, std::ostream& table) {
  std::vector<std::string> selected;
  if (cfg.check == "all") {
    selected = kChecks;
  } else {
    for (const auto& c : split_commas(cfg.check)) {
      if (std::find(kChecks.begin(), kChecks.end(), c) == kChecks.end())
        throw UsageError("unknown check '" + c + "'");
      selected.push_back(c);
    }
  }
  params["check"] = cfg.check;
  params["seed"] = cfg.seed;
  if (cfg.p) params["p"] = cfg.p;
  if (cfg.g) params["g"] = cfg.g;
  if (!cfg.eps.empty()) params["eps"] = cfg.eps;
  params["lmax"] = cfg.lmax;
  params["nmax"] = cfg.nmax;
  params["dmax"] = cfg.dmax;
  for (const auto& c : selected) {
    if (c == "lemma31") check_lemma31(cfg, results, as, table);
    else if (c == "cor43") check_cor43(cfg, results, as, table);
    else if (c == "sublevel") check_sublevel(cfg, results, as, table);
    else if (c == "prop31") check_prop31(cfg, results, as, table);
    else if (c == "hardy-ramanujan") check_hardy_ramanujan(results, as, table);
    else if (c == "fekete") check_fekete(cfg, results, as, table);
    else if (c == "stark") check_stark(cfg, results, as, table);
    else check_exponents(results, as, table);
  }
}

}  // namespace

std::string command_name(Command c) {
  switch (c) {
    case Command::kWeilEnum: return "weil-enum";
    case Command::kCensus: return "census";
    case Command::kDensity: return "density";
    case Command::kLowerBound: return "lower-bound";
    case Command::kBoundsCheck: return "bounds-check";
  }
  return "?";
}

std::optional<Command> parse_command(const std::string& name) {
  for (auto c : {Command::kWeilEnum, Command::kCensus, Command::kDensity, Command::kLowerBound, Command::kBoundsCheck})
    if (command_name(c) == name) return c;
  return std::nullopt;
}

Json json_integer(const Integer& v) {
  if (fits_int64(v)) return to_int64(v);
  return v.get_str();
}

Json json_rational(const Rational& v) { return v.get_str(); }

RunOutcome execute(const RunConfig& cfg, ClassNumberCache& cache) {
  if (cfg.workers < 1) throw UsageError("workers must be positive");
  const auto start = std::chrono::steady_clock::now();
  Json params = Json::object();
  Json results = Json::array();
  Assertions as;
  std::ostringstream table;
  switch (cfg.command) {
    case Command::kWeilEnum: weil_enum(cfg, params, results, as, table); break;
    case Command::kCensus: census(cfg, cache, params, results, as, table); break;
    case Command::kDensity: density(cfg, params, results, as, table); break;
    case Command::kLowerBound: lower_bound(cfg, cache, params, results, as, table); break;
    case Command::kBoundsCheck: bounds_check(cfg, params, results, as, table); break;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  RunOutcome out;
  out.status = as.failed.empty() ? 0 : 1;
  out.report = Json::object();
  out.report["command"] = command_name(cfg.command);
  out.report["params"] = params;
  out.report["results"] = results;
  out.report["assertions"] = {{"passed", as.passed}, {"failed", as.failed}};
  // Wall-clock time would break byte-identical reports, so it is opt-in.
  out.report["timing"] = cfg.timing ? Json{{"recorded", true}, {"seconds", seconds}} : Json{{"recorded", false}};
  table << "assertions: " << as.passed << " passed, " << as.failed.size() << " failed";
  table << " (" << std::fixed << std::setprecision(2) << seconds << " s)\n";
  out.table = table.str();
  return out;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    ClassNumberCache cache(cfg.cache);
    for (const auto& w : cache.warnings()) err << "warning: " << w << "\n";
    RunOutcome res = execute(cfg, cache);
    cache.flush();
    if (!cfg.output.empty()) {
      std::ofstream f(cfg.output, std::ios::binary | std::ios::trunc);
      if (!f) throw std::runtime_error("cannot write report " + cfg.output);
      f << res.report.dump(2) << "\n";
    }
    out << res.table;
    for (const auto& fail : res.report["assertions"]["failed"])
      err << "FAILED " << fail["record"].get<std::string>() << ": " << fail["assertion"].get<std::string>() << "\n";
    return res.status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace weilcensus
