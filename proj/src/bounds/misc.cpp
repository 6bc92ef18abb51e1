#include "weilcensus/bounds.hpp"

#include "weilcensus/arith.hpp"
#include "weilcensus/orders.hpp"
#include "weilcensus/weil.hpp"

#include <set>
#include <stdexcept>

namespace weilcensus {

Integer disc_leading_coeff(const Integer& p, int g, const std::vector<Integer>& prefix) {
  WeilParams params(p, g);
  if (prefix.size() != static_cast<std::size_t>(g - 1))
    throw DomainError("prefix must hold g - 1 coefficients");
  const int npts = 2 * g + 2;
  std::vector<Rational> dd(static_cast<std::size_t>(npts));
  CoefficientVector a = prefix;
  a.emplace_back(0);
  for (int i = 0; i < npts; ++i) {
    a.back() = i;
    dd[i] = Rational(discriminant(build_F(params, a)));
  }
  // Newton divided differences on the nodes 0, 1, ..., npts - 1.
  for (int level = 1; level < npts; ++level)
    for (int i = npts - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / Rational(level);
  if (dd[npts - 1] != 0) throw std::logic_error("disc_leading_coeff: interpolant has degree above 2g");
  const Rational lead = dd[npts - 2];
  if (lead.get_den() != 1) throw std::logic_error("disc_leading_coeff: non-integral leading coefficient");
  return lead.get_num();
}

StarkReport stark_ingredient_checks(std::int64_t p) {
  StarkReport rep;
  rep.p = p;
  rep.all_ok = true;
  for (const auto& cls : classify_g1(p)) {
    if (cls.kind != G1Kind::kOrdinary) continue;
    StarkRecord r{};
    r.a = cls.trace;
    r.D = cls.trace * cls.trace - 4 * p;
    std::tie(r.d_K, r.c) = quadratic_decompose(r.D);
    r.mu = r.d_K == -3 ? 6 : r.d_K == -4 ? 4 : 2;
    r.mu_ok = 2 * r.mu <= 32;
    r.euler_lower = 1;
    r.euler_exact = 1;
    std::int64_t m = -r.D;
    for (std::int64_t l = 2; l <= m; ++l) {
      if (m % l) continue;
      while (m % l == 0) m /= l;
      const Rational one_minus = Rational(l - 1, l);
      switch (kronecker(r.d_K, l)) {
        case 1:  // split
          r.euler_lower *= one_minus * one_minus;
          r.euler_exact *= one_minus * one_minus;
          break;
        case 0:  // ramified
          r.euler_lower *= one_minus;
          r.euler_exact *= one_minus;
          break;
        default:  // inert: one prime of norm l^2
          r.euler_lower *= one_minus;
          r.euler_exact *= Rational(l * l - 1, l * l);
          break;
      }
    }
    r.euler_ok = r.euler_lower <= r.euler_exact && r.euler_lower > 0;
    rep.all_ok = rep.all_ok && r.mu_ok && r.euler_ok;
    rep.records.push_back(std::move(r));
  }
  return rep;
}

ExponentAudit exponent_audit() {
  ExponentAudit audit;
  audit.components = {
      {"enumeration of Weil polynomials", Rational(1, 4)},
      {"lattice count N", Rational(2)},
      {"fourth power of |d'|", Rational(8)},
      {"class group product", Rational(1)},
  };
  std::set<std::string> seen;
  audit.total = 0;
  for (const auto& [name, e] : audit.components) {
    seen.insert(name);
    audit.total += e;
  }
  audit.each_used_once = seen.size() == audit.components.size();
  return audit;
}

}  // namespace weilcensus
