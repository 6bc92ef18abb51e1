#include "weilcensus/arith.hpp"

namespace weilcensus {

namespace {

int sign_of(const Rational& r) { return sgn(r); }

int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

IntPolynomial normalize_positive(const RatPolynomial& r) {
  // primitive_part keeps the sign of the leading coefficient, and the
  // scale factor it removes is positive.
  return r.primitive_part();
}

}  // namespace

IntPolynomial squarefree_part(const IntPolynomial& f) {
  if (f.degree() < 1) throw DomainError("squarefree part needs degree >= 1");
  RatPolynomial rf(f);
  RatPolynomial g = gcd(rf, rf.derivative());
  RatPolynomial q, r;
  rf.divmod(g, q, r);
  IntPolynomial out = q.primitive_part();
  if (out.leading() < 0) out = -out;
  return out;
}

SturmChain::SturmChain(const IntPolynomial& f) {
  if (f.degree() < 1) throw DomainError("Sturm chain needs degree >= 1");
  RatPolynomial rf(f);
  if (gcd(rf, rf.derivative()).degree() > 0) throw DomainError("Sturm chain requires a squarefree polynomial");
  chain_.push_back(f);
  chain_.push_back(f.derivative().divexact(f.derivative().content()));
  while (chain_.back().degree() > 0) {
    RatPolynomial q, r;
    RatPolynomial(chain_[chain_.size() - 2]).divmod(RatPolynomial(chain_.back()), q, r);
    if (r.is_zero()) break;
    chain_.push_back(-normalize_positive(r));
  }
}

int SturmChain::variations(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(sign_of(p.eval(x)));
  return count_variations(signs);
}

int SturmChain::variations_at_sqrt(const Rational& c, const Integer& d) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(sign_at_sqrt(p, c, d));
  return count_variations(signs);
}

int SturmChain::variations_at_infinity(bool positive) const {
  std::vector<int> signs;
  for (const auto& p : chain_) {
    int s = sgn(p.leading());
    if (!positive && (p.degree() % 2 == 1)) s = -s;
    signs.push_back(s);
  }
  return count_variations(signs);
}

int sign_at_sqrt(const IntPolynomial& poly, const Rational& c, const Integer& d) {
  if (d <= 0) throw DomainError("sign_at_sqrt requires d > 0");
  // P(c sqrt d) = u + v sqrt d with u, v rational.
  Rational u = 0, v = 0;
  Rational cpow = 1;
  Integer dpow = 1;  // d^{floor(k/2)}
  for (int k = 0; k <= poly.degree(); ++k) {
    if (k > 0) {
      cpow *= c;
      if (k % 2 == 0) dpow *= d;
    }
    if (poly[k] == 0) continue;
    Rational term = Rational(poly[k]) * cpow * Rational(dpow);
    if (k % 2 == 0)
      u += term;
    else
      v += term;
  }
  const int su = sgn(u), sv = sgn(v);
  if (sv == 0) return su;
  if (su == 0) return sv;
  if (su == sv) return su;
  // opposite signs: compare u^2 with v^2 d
  Rational lhs = u * u, rhs = v * v * Rational(d);
  int cmp = ::cmp(lhs, rhs);
  if (cmp == 0) return 0;
  return cmp > 0 ? su : sv;
}

std::size_t real_roots_in_interval(const IntPolynomial& f, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw DomainError("real_roots_in_interval requires lo < hi");
  SturmChain chain(f);
  return static_cast<std::size_t>(chain.variations(lo) - chain.variations(hi));
}

std::size_t real_root_count(const IntPolynomial& f) {
  SturmChain chain(f);
  return static_cast<std::size_t>(chain.variations_at_infinity(false) - chain.variations_at_infinity(true));
}

}  // namespace weilcensus
