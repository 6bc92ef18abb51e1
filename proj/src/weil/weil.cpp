#include "weilcensus/weil.hpp"

#include <string>

namespace weilcensus {

WeilParams::WeilParams(Integer p, int g) : p_(std::move(p)), g_(g) {
  if (!is_prime(p_)) throw DomainError("p must be prime, got " + p_.get_str());
  if (g_ < 1 || g_ > kMaxDimension) throw DomainError("g must satisfy 1 <= g <= 8, got " + std::to_string(g_));
}

IntPolynomial build_F(const WeilParams& params, std::span<const Integer> a) {
  const int g = params.g();
  if (a.size() != static_cast<std::size_t>(g))
    throw DomainError("coefficient vector length " + std::to_string(a.size()) + " does not match g = " +
                      std::to_string(g));
  const Integer& p = params.p();
  std::vector<Integer> c(static_cast<std::size_t>(2 * g) + 1);
  c[static_cast<std::size_t>(2 * g)] = 1;
  c[0] = ipow(p, static_cast<unsigned long>(g));
  for (int i = 1; i < g; ++i) {
    const Integer& ai = a[static_cast<std::size_t>(i - 1)];
    c[static_cast<std::size_t>(2 * g - i)] += ai;
    c[static_cast<std::size_t>(i)] += ai * ipow(p, static_cast<unsigned long>(g - i));
  }
  c[static_cast<std::size_t>(g)] += a[static_cast<std::size_t>(g - 1)];
  return IntPolynomial(std::move(c));
}

bool has_functional_symmetry(const IntPolynomial& f, const Integer& p) {
  if (f.is_zero() || f.degree() % 2 != 0) return false;
  const int g = f.degree() / 2;
  for (int j = 0; j <= g; ++j)
    if (f[g - j] != ipow(p, static_cast<unsigned long>(j)) * f[g + j]) return false;
  return true;
}

namespace {

// x^{g-k} (x^2 + p)^k, the image of (x + p/x)^k under x^g.
IntPolynomial real_basis(int g, int k, const Integer& p) {
  IntPolynomial quad({p, Integer(0), Integer(1)});
  return pow(quad, static_cast<unsigned>(k)) * IntPolynomial::monomial(1, g - k);
}

}  // namespace

IntPolynomial real_weil_poly(const IntPolynomial& f, const Integer& p) {
  if (!f.is_monic() || f.degree() % 2 != 0 || f.degree() < 2)
    throw DomainError("real_weil_poly expects a monic polynomial of even degree >= 2");
  const int g = f.degree() / 2;
  // Peel the top coefficient against the basis x^{g-k}(x^2+p)^k, k = g..0.
  IntPolynomial rest = f;
  std::vector<Integer> h(static_cast<std::size_t>(g) + 1);
  for (int k = g; k >= 0; --k) {
    const Integer c = rest[g + k];
    h[static_cast<std::size_t>(k)] = c;
    if (c != 0) rest -= c * real_basis(g, k, p);
  }
  if (!rest.is_zero()) throw DomainError("functional equation violated: " + f.to_string());
  return IntPolynomial(std::move(h));
}

IntPolynomial expand_real_weil_poly(const IntPolynomial& h, const Integer& p) {
  const int g = h.degree();
  if (g < 0) return {};
  IntPolynomial out;
  for (int k = 0; k <= g; ++k)
    if (h[k] != 0) out += h[k] * real_basis(g, k, p);
  return out;
}

bool is_weil(const IntPolynomial& f, const Integer& p) {
  if (!f.is_monic() || f.degree() % 2 != 0 || f.degree() < 2)
    throw DomainError("is_weil expects a monic polynomial of even degree >= 2");
  if (!has_functional_symmetry(f, p)) return false;
  const IntPolynomial h = real_weil_poly(f, p);
  const IntPolynomial core = squarefree_part(h);
  const int n = core.degree();
  // Count roots in the closed interval [-2 sqrt p, 2 sqrt p] exactly in Q(sqrt p).
  SturmChain chain(core);
  const int open_closed = chain.variations_at_sqrt(Rational(-2), p) - chain.variations_at_sqrt(Rational(2), p);
  const int at_left = sign_at_sqrt(core, Rational(-2), p) == 0 ? 1 : 0;
  return open_closed + at_left == n;
}

bool in_Yg(const WeilParams& params, std::span<const Integer> a) {
  const int g = params.g();
  if (a.size() != static_cast<std::size_t>(g)) return false;
  const Integer& p = params.p();
  const Integer g2 = g * g;
  for (int i = 1; i < g; ++i) {
    const Integer& ai = a[static_cast<std::size_t>(i - 1)];
    if (g2 * ai * ai > ipow(p, static_cast<unsigned long>(i))) return false;
  }
  const Integer& ag = a[static_cast<std::size_t>(g - 1)];
  if (g2 * ag * ag > 4 * ipow(p, static_cast<unsigned long>(g))) return false;
  Integer d;
  mpz_gcd(d.get_mpz_t(), ag.get_mpz_t(), p.get_mpz_t());
  return d == 1;
}

WeilCandidate make_candidate(const WeilParams& params, CoefficientVector a) {
  IntPolynomial F = build_F(params, a);
  WeilCandidate cand{params, std::move(a), std::move(F), false, false};
  cand.is_weil = is_weil(cand.F, params.p());
  Integer d;
  mpz_gcd(d.get_mpz_t(), cand.a.back().get_mpz_t(), params.p().get_mpz_t());
  if (cand.is_weil && d == 1) cand.is_simple_ordinary = is_simple_ordinary(cand);
  return cand;
}

bool is_simple_ordinary(const WeilCandidate& cand) {
  if (!cand.is_weil) throw DomainError("simplicity test requires a Weil polynomial");
  Integer d;
  mpz_gcd(d.get_mpz_t(), cand.a.back().get_mpz_t(), cand.params.p().get_mpz_t());
  if (d != 1) throw DomainError("simplicity test is only defined here for ordinary candidates (gcd(a_g, p) = 1)");
  return irreducible_over_Q(cand.F);
}

std::vector<G1Class> classify_g1(std::int64_t p) {
  if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p))) throw DomainError("classify_g1 requires a prime p");
  std::vector<G1Class> out;
  std::int64_t bound = 0;
  while ((bound + 1) * (bound + 1) <= 4 * p) ++bound;
  for (std::int64_t a = -bound; a <= bound; ++a) {
    const bool ordinary = (a % p) != 0;
    out.push_back({a, ordinary ? G1Kind::kOrdinary : G1Kind::kSupersingular});
  }
  return out;
}

}  // namespace weilcensus
