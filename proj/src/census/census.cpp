#include "weilcensus/census.hpp"

#include "weilcensus/orders.hpp"
#include "weilcensus/parallel.hpp"

#include <set>
#include <string>

namespace weilcensus {

namespace {

void require_ordinary_trace(std::int64_t p, std::int64_t a) {
  if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p))) throw DomainError("p must be prime");
  if (a * a >= 4 * p) throw DomainError("trace " + std::to_string(a) + " is out of range for p = " + std::to_string(p));
  if (a % p == 0) throw DomainError("trace " + std::to_string(a) + " is supersingular");
}

}  // namespace

std::int64_t isogeny_class_size_g1(std::int64_t p, std::int64_t a) {
  require_ordinary_trace(p, a);
  std::int64_t total = 0;
  for (const auto& order : orders_between(a * a - 4 * p)) total += order.class_number;
  return total;
}

std::int64_t isogeny_class_size_g1(std::int64_t p, std::int64_t a, const ClassNumberProvider& h) {
  if (!h) return isogeny_class_size_g1(p, a);
  require_ordinary_trace(p, a);
  const auto [d_K, c] = quadratic_decompose(a * a - 4 * p);
  std::int64_t total = 0;
  for (std::int64_t cp = 1; cp <= c; ++cp)
    if (c % cp == 0) total += h(cp * cp * d_K);
  return total;
}

BruteForceCensus brute_force_curve_census(std::int64_t p, unsigned workers) {
  if (p < 5 || !is_prime_u64(static_cast<std::uint64_t>(p)))
    throw UnsupportedError("brute-force census needs a prime p >= 5, got " + std::to_string(p));
  const auto P = static_cast<std::uint64_t>(p);

  // chi[x] = quadratic character of x mod p
  std::vector<int> chi(P, -1);
  chi[0] = 0;
  for (std::uint64_t x = 1; x < P; ++x) chi[x * x % P] = 1;
  std::vector<std::uint64_t> u4(P), u6(P), cube(P);
  for (std::uint64_t u = 0; u < P; ++u) {
    const std::uint64_t u2 = u * u % P;
    u4[u] = u2 * u2 % P;
    u6[u] = u4[u] * u2 % P;
    cube[u] = u2 * u % P;
  }

  struct Partial {
    std::map<std::int64_t, std::int64_t> by_trace;
    std::int64_t equations = 0;
  };
  const std::uint64_t parts = std::max<std::uint64_t>(1, std::min<std::uint64_t>(P, 4 * std::max(1u, workers)));
  std::vector<Partial> partial(parts);

  run_tasks(parts, workers, [&](std::uint64_t part) {
    const auto [lo, hi] = split_range(P, parts, part);
    Partial& out = partial[part];
    std::set<std::pair<std::uint64_t, std::uint64_t>> orbit;
    for (std::uint64_t A = lo; A < hi; ++A)
      for (std::uint64_t B = 0; B < P; ++B) {
        if ((4 * cube[A] + 27 * (B * B % P)) % P == 0) continue;
        // Count the class once, at the lexicographically smallest point of its orbit.
        orbit.clear();
        bool smallest = true;
        for (std::uint64_t u = 1; u < P && smallest; ++u) {
          const std::uint64_t A2 = u4[u] * A % P, B2 = u6[u] * B % P;
          if (std::pair(A2, B2) < std::pair(A, B)) smallest = false;
          orbit.emplace(A2, B2);
        }
        if (!smallest) continue;
        std::int64_t s = 0;
        for (std::uint64_t x = 0; x < P; ++x) s += chi[(cube[x] + A * x + B) % P];
        const std::int64_t trace = -s;  // #E = p + 1 + s
        if (trace * trace > 4 * p) throw std::logic_error("brute-force census: Hasse bound violated");
        ++out.by_trace[trace];
        out.equations += static_cast<std::int64_t>(orbit.size());
      }
  });

  BruteForceCensus census;
  census.p = p;
  for (const auto& part : partial) {
    for (const auto& [t, n] : part.by_trace) census.classes_by_trace[t] += n;
    census.curve_equations += part.equations;
  }
  for (const auto& [t, n] : census.classes_by_trace) census.total_classes += n;
  return census;
}

CensusReport census_compare(std::int64_t p, unsigned workers, const ClassNumberProvider& h) {
  if (p < 5 || !is_prime_u64(static_cast<std::uint64_t>(p)))
    throw UnsupportedError("census needs a prime p >= 5, got " + std::to_string(p));
  const auto brute = brute_force_curve_census(p, workers);
  const auto kinds = classify_g1(p);

  CensusReport report;
  report.p = p;
  report.classes.resize(kinds.size());
  run_tasks(kinds.size(), workers, [&](std::uint64_t i) {
    const auto& k = kinds[i];
    IsogenyClassG1 rec{p, k.trace, k.trace * k.trace - 4 * p, k.kind, std::nullopt, 0};
    if (auto it = brute.classes_by_trace.find(k.trace); it != brute.classes_by_trace.end())
      rec.size_bruteforce = it->second;
    if (k.kind == G1Kind::kOrdinary) rec.size_classnumber = isogeny_class_size_g1(p, k.trace, h);
    report.classes[i] = rec;
  });

  report.total_classes = brute.total_classes;
  report.curve_equations = brute.curve_equations;
  report.m_p1 = static_cast<std::int64_t>(kinds.size());
  report.traces_observed = static_cast<std::int64_t>(brute.classes_by_trace.size());
  report.all_match = true;
  std::set<std::int64_t> classified;
  for (const auto& rec : report.classes) {
    report.all_match = report.all_match && rec.matches();
    classified.insert(rec.a);
  }
  std::set<std::int64_t> observed;
  for (const auto& [t, n] : brute.classes_by_trace) observed.insert(t);
  report.m_p1_matches = classified == observed;
  report.mass_ok = brute.curve_equations == p * p - p;
  return report;
}

}  // namespace weilcensus
