#include "weilcensus/bounds.hpp"

#include "weilcensus/parallel.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace weilcensus {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

// |e^{ia} - e^{ib}| = 2 |sin((a - b) / 2)|
long double chord(long double a, long double b) { return 2 * std::fabs(std::sin((a - b) / 2)); }

void require_m(int m) {
  if (m < 2) throw DomainError("need at least two points on the circle");
}

}  // namespace

long double pair_product(const UnitCirclePoints& points) {
  require_m(static_cast<int>(points.angles.size()));
  long double prod = 1;
  const auto& t = points.angles;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) prod *= chord(t[i], t[j]);
  return prod;
}

long double log_pair_product(const UnitCirclePoints& points) {
  require_m(static_cast<int>(points.angles.size()));
  long double sum = 0;
  const auto& t = points.angles;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) sum += std::log(chord(t[i], t[j]));
  return sum;
}

UnitCirclePoints roots_of_unity(int m) {
  require_m(m);
  UnitCirclePoints pts;
  for (int k = 0; k < m; ++k) pts.angles.push_back(2 * kPi * k / m);
  return pts;
}

CircleSearchResult lemma31_max_search(int m, std::uint64_t seed, int starts, unsigned workers) {
  require_m(m);
  if (starts < 1) throw DomainError("need at least one start");
  std::vector<UnitCirclePoints> found(static_cast<std::size_t>(starts));
  std::vector<long double> value(static_cast<std::size_t>(starts));

  run_tasks(static_cast<std::uint64_t>(starts), workers, [&](std::uint64_t k) {
    std::mt19937_64 rng(seed ^ k);
    std::uniform_real_distribution<double> unif(0.0, 2 * std::numbers::pi);
    UnitCirclePoints pts;
    pts.angles.push_back(0);  // rotation invariance: pin the first point
    for (int i = 1; i < m; ++i) pts.angles.push_back(static_cast<long double>(unif(rng)));
    long double cur = log_pair_product(pts);

    std::vector<long double> grad(static_cast<std::size_t>(m));
    long double step = 0.1L;
    for (int iter = 0; iter < 5000; ++iter) {
      long double norm2 = 0;
      for (int i = 1; i < m; ++i) {
        long double gi = 0;
        for (int j = 0; j < m; ++j)
          if (j != i) gi += 0.5L / std::tan((pts.angles[i] - pts.angles[j]) / 2);
        grad[i] = gi;
        norm2 += gi * gi;
      }
      // near the optimum the objective gap is O(|grad|^2)
      if (norm2 < 1e-22L) break;
      // backtracking line search
      UnitCirclePoints trial = pts;
      bool improved = false;
      for (int bt = 0; bt < 60; ++bt) {
        for (int i = 1; i < m; ++i) trial.angles[i] = pts.angles[i] + step * grad[i];
        const long double v = log_pair_product(trial);
        if (std::isfinite(v) && v >= cur + 1e-4L * step * norm2) {
          pts = trial;
          improved = v - cur > 1e-17L * std::max(1.0L, std::fabs(cur));
          cur = v;
          step *= 2;
          break;
        }
        step /= 2;
      }
      if (!improved) break;
    }
    for (auto& a : pts.angles) {
      a = std::fmod(a, 2 * kPi);
      if (a < 0) a += 2 * kPi;
    }
    found[k] = std::move(pts);
    value[k] = cur;
  });

  std::size_t best = 0;
  for (std::size_t k = 1; k < value.size(); ++k)
    if (value[k] > value[best]) best = k;
  CircleSearchResult r;
  r.m = m;
  r.best = found[best];
  r.product = pair_product(r.best);
  r.starts = starts;
  return r;
}

}  // namespace weilcensus
