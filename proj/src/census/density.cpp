#include "weilcensus/census.hpp"

#include "weilcensus/orders.hpp"
#include "weilcensus/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <string>

namespace weilcensus {

namespace {

void validate_epsilon(const Rational& eps) {
  if (eps <= 0) throw DomainError("epsilon must be positive");
  if (4 % eps.get_den() != 0) throw DomainError("epsilon denominator must divide 4, got " + eps.get_str());
}

/// x^v >= g^{2gv} p^e, rearranged so that every power is integral.
struct Threshold {
  unsigned long v;
  Integer lhs_scale;  // p^{max(0, -e)}
  Integer rhs;        // g^{2gv} p^{max(0, e)}

  Threshold(std::int64_t p, int g, unsigned long v_, long e) : v(v_) {
    lhs_scale = e < 0 ? ipow(Integer(p), static_cast<unsigned long>(-e)) : Integer(1);
    rhs = ipow(Integer(g), 2ul * static_cast<unsigned long>(g) * v) *
          (e > 0 ? ipow(Integer(p), static_cast<unsigned long>(e)) : Integer(1));
  }
  bool met(const Integer& abs_value) const { return ipow(abs_value, v) * lhs_scale >= rhs; }
};

struct EpsTest {
  Threshold s, t;
};

EpsTest make_test(std::int64_t p, int g, const Rational& eps) {
  validate_epsilon(eps);
  const long u = eps.get_num().get_si(), v = eps.get_den().get_si();
  const long g2 = static_cast<long>(g) * g;
  return {Threshold(p, g, static_cast<unsigned long>(v), (2 * g2 - g) * v - g2 * u),
          Threshold(p, g, static_cast<unsigned long>(v), g2 * (v - u))};
}

struct Sweep {
  std::uint64_t y = 0, y_sim = 0;
  std::vector<std::uint64_t> s, s_sim, t;
  bool inclusions = true;
  bool monotone = true;
  std::vector<Integer> disc_r;  // only when collected
};

Sweep sweep(std::int64_t p, int g, const std::vector<Rational>& eps, unsigned workers, bool collect) {
  WeilParams params(p, g);
  YgEnumerator en(params);
  const std::uint64_t total = en.count_within(kDensityBudget);

  std::vector<EpsTest> tests;
  for (const auto& e : eps) tests.push_back(make_test(p, g, e));
  // Indices of eps in increasing order, for the monotonicity check.
  std::vector<std::size_t> order(eps.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return eps[i] < eps[j]; });

  const std::uint64_t parts = std::max<std::uint64_t>(1, std::min<std::uint64_t>(total, 64));
  std::vector<Sweep> stats(parts);
  run_tasks(parts, workers, [&](std::uint64_t part) {
    auto& st = stats[part];
    st.s.assign(eps.size(), 0);
    st.s_sim.assign(eps.size(), 0);
    st.t.assign(eps.size(), 0);
    const auto [lo, hi] = split_range(total, parts, part);
    std::vector<char> in_s(eps.size());
    en.for_each(lo, hi, [&](std::uint64_t, const CoefficientVector& a) {
      auto cand = make_candidate(params, a);
      ++st.y;
      const bool sim = cand.is_weil && cand.is_simple_ordinary;
      const Integer disc_f = abs(discriminant(cand.F));
      Integer disc_r;
      if (sim) {
        ++st.y_sim;
        disc_r = abs(build_R_unchecked(cand.F, p).disc);
        if (collect) st.disc_r.push_back(disc_r);
      }
      for (std::size_t k = 0; k < eps.size(); ++k) {
        const bool s = tests[k].s.met(disc_f);
        const bool t = sim && tests[k].t.met(disc_r);
        in_s[k] = s;
        st.s[k] += s;
        st.s_sim[k] += s && sim;
        st.t[k] += t;
        if (s && sim && !t) st.inclusions = false;
      }
      for (std::size_t k = 1; k < order.size(); ++k)
        if (in_s[order[k - 1]] && !in_s[order[k]]) st.monotone = false;
    });
  });

  Sweep out;
  out.s.assign(eps.size(), 0);
  out.s_sim.assign(eps.size(), 0);
  out.t.assign(eps.size(), 0);
  for (auto& st : stats) {
    out.y += st.y;
    out.y_sim += st.y_sim;
    for (std::size_t k = 0; k < eps.size(); ++k) {
      out.s[k] += st.s[k];
      out.s_sim[k] += st.s_sim[k];
      out.t[k] += st.t[k];
    }
    out.inclusions = out.inclusions && st.inclusions;
    out.monotone = out.monotone && st.monotone;
    for (auto& d : st.disc_r) out.disc_r.push_back(std::move(d));
  }
  return out;
}

Rational ratio(std::uint64_t n, std::uint64_t d) {
  return d == 0 ? Rational(0) : make_rational(from_int64(static_cast<std::int64_t>(n)), from_int64(static_cast<std::int64_t>(d)));
}

}  // namespace

Rational parse_epsilon(const std::string& text) {
  const auto slash = text.find('/');
  const std::string us = text.substr(0, slash);
  const std::string vs = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto parse = [&](const std::string& s) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw DomainError("epsilon must look like u/v, got '" + text + "'");
    return value;
  };
  const long u = parse(us), v = parse(vs);
  if (v <= 0) throw DomainError("epsilon denominator must be positive");
  Rational eps = make_rational(Integer(u), Integer(v));
  validate_epsilon(eps);
  return eps;
}

DensitySweep density_sweep(std::int64_t p, int g, const std::vector<Rational>& eps, unsigned workers) {
  if (g < 2) throw UnsupportedError("density statistics need g >= 2");
  const auto sw = sweep(p, g, eps, workers, false);
  DensitySweep out;
  out.monotone = sw.monotone;
  for (std::size_t k = 0; k < eps.size(); ++k) {
    DensityReport r;
    r.p = p;
    r.g = g;
    r.eps = eps[k];
    r.y_count = sw.y;
    r.y_sim = sw.y_sim;
    r.s_count = sw.s[k];
    r.s_sim = sw.s_sim[k];
    r.t_sim = sw.t[k];
    r.s_density = ratio(r.s_count, r.y_count);
    r.s_sim_density = ratio(r.s_sim, r.y_count);
    r.t_sim_density = ratio(r.t_sim, r.y_count);
    r.inclusions_hold = sw.inclusions && r.s_sim <= r.s_count && r.s_count <= r.y_count &&
                        r.t_sim <= r.y_sim && r.s_sim <= r.t_sim;
    out.reports.push_back(std::move(r));
  }
  return out;
}

DensityReport density_report(std::int64_t p, int g, const Rational& eps, unsigned workers) {
  return density_sweep(p, g, {eps}, workers).reports.front();
}

LowerBoundReport lower_bound_report(std::int64_t p, int g, unsigned workers, const ClassNumberProvider& h,
                                    const Rational& eps) {
  LowerBoundReport r;
  r.p = p;
  r.g = g;
  if (g == 1) {
    WeilParams params(p, 1);  // validates p
    for (std::int64_t a = 1; a * a < 4 * p; ++a) {
      if (a % p == 0) continue;
      const std::int64_t D = a * a - 4 * p;
      const std::int64_t hD = h ? h(D) : class_number_form_count(D);
      r.terms.push_back({-a, D, hD});
      r.terms.push_back({a, D, hD});
      r.class_number_sum += 2 * hD;
    }
    std::sort(r.terms.begin(), r.terms.end(), [](const auto& x, const auto& y) { return x.a < y.a; });
    r.y_count = r.y_sim = r.terms.size();
    return r;
  }
  if (g != 2 && g != 3) throw UnsupportedError("lower-bound report supports g in {1, 2, 3}");
  auto sw = sweep(p, g, {eps}, workers, true);
  r.y_count = sw.y;
  r.y_sim = sw.y_sim;
  r.eps = eps;
  r.t_sim_density = ratio(sw.t[0], sw.y);
  if (!sw.disc_r.empty()) {
    std::sort(sw.disc_r.begin(), sw.disc_r.end());
    r.disc_min = sw.disc_r.front();
    r.disc_max = sw.disc_r.back();
    r.disc_median = sw.disc_r[(sw.disc_r.size() - 1) / 2];
  }
  return r;
}

}  // namespace weilcensus
