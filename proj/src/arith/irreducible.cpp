#include "weilcensus/arith.hpp"

#include "modpoly.hpp"

#include <bitset>
#include <limits>

namespace weilcensus {

namespace {

using ZPoly = std::vector<Integer>;  // low degree first

constexpr std::size_t kDegreeSlots = kMaxIrreducibilityDegree + 1;
using DegreeSet = std::bitset<kDegreeSlots>;
constexpr int kGoodPrimesToTry = 8;

ZPoly lift_to_z(const modp::Poly& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
  return r;
}

modp::Poly reduce_z(const ZPoly& a, const modp::Field& F) {
  modp::Poly r(a.size());
  Integer q = static_cast<unsigned long>(F.q), t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_fdiv_r(t.get_mpz_t(), a[i].get_mpz_t(), q.get_mpz_t());
    r[i] = t.get_ui();
  }
  modp::trim(r);
  return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void zreduce(ZPoly& a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Lifts F = G*H from mod q to mod q^k (F monic mod q^k, g monic, h monic).
void hensel_pair(const ZPoly& F, const modp::Poly& g, const modp::Poly& h, const modp::Field& Fq, unsigned k,
                 ZPoly& G, ZPoly& H) {
  modp::Poly s, t;
  modp::Poly one = modp::ext_gcd(g, h, s, t, Fq);
  if (modp::degree(one) != 0) throw DomainError("Hensel lifting: factors not coprime mod q");
  G = lift_to_z(g);
  H = lift_to_z(h);
  const Integer q = static_cast<unsigned long>(Fq.q);
  Integer m = q;
  for (unsigned j = 1; j < k; ++j) {
    ZPoly E = F;
    ZPoly GH = zmul(G, H);
    if (GH.size() > E.size()) E.resize(GH.size());
    for (std::size_t i = 0; i < GH.size(); ++i) E[i] -= GH[i];
    for (auto& c : E) {
      if (!mpz_divisible_p(c.get_mpz_t(), m.get_mpz_t())) throw DomainError("Hensel lifting invariant broken");
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    }
    modp::Poly e = reduce_z(E, Fq);
    modp::Poly te = modp::mul(t, e, Fq);
    modp::Poly Q, dG;
    modp::divmod(te, g, Q, dG, Fq);
    modp::Poly dH = modp::add(modp::mul(s, e, Fq), modp::mul(Q, h, Fq), Fq);
    ZPoly zdG = lift_to_z(dG), zdH = lift_to_z(dH);
    if (zdG.size() > G.size()) G.resize(zdG.size());
    if (zdH.size() > H.size()) H.resize(zdH.size());
    for (std::size_t i = 0; i < zdG.size(); ++i) G[i] += m * zdG[i];
    for (std::size_t i = 0; i < zdH.size(); ++i) H[i] += m * zdH[i];
    m *= q;
  }
  zreduce(G, m);
  zreduce(H, m);
}

void hensel_tree(const ZPoly& F, const std::vector<modp::Poly>& factors, std::size_t lo, std::size_t hi,
                 const modp::Field& Fq, unsigned k, std::vector<ZPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(F);
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  modp::Poly g{1}, h{1};
  for (std::size_t i = lo; i < mid; ++i) g = modp::mul(g, factors[i], Fq);
  for (std::size_t i = mid; i < hi; ++i) h = modp::mul(h, factors[i], Fq);
  ZPoly G, H;
  hensel_pair(F, g, h, Fq, k, G, H);
  hensel_tree(G, factors, lo, mid, Fq, k, out);
  hensel_tree(H, factors, mid, hi, Fq, k, out);
}

DegreeSet subset_degree_sums(const std::vector<std::pair<int, modp::Poly>>& ddf) {
  DegreeSet reachable;
  reachable.set(0);
  for (const auto& [d, prod] : ddf) {
    const int count = modp::degree(prod) / d;
    for (int c = 0; c < count; ++c) reachable |= (reachable << static_cast<std::size_t>(d));
  }
  return reachable;
}

// Mignotte-style bound on the coefficients of any factor: 2^n * ||f||_2.
Integer factor_coefficient_bound(const IntPolynomial& f) {
  Integer sumsq = 0;
  for (const auto& c : f.coeffs()) sumsq += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), sumsq.get_mpz_t());
  norm += 1;
  return ipow(Integer(2), static_cast<unsigned long>(f.degree())) * norm;
}

bool find_factor_by_recombination(const IntPolynomial& f, const std::vector<ZPoly>& lifted, const Integer& modulus,
                                  const DegreeSet& allowed) {
  const std::size_t r = lifted.size();
  const int n = f.degree();
  const Integer& lc = f.leading();
  const Integer half = modulus / 2;
  // Subsets in increasing size; only up to r/2 since the complement of a
  // factor is also a factor.
  for (std::size_t size = 1; 2 * size <= r; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      int deg = 0;
      for (auto i : idx) deg += static_cast<int>(lifted[i].size()) - 1;
      if (deg > 0 && deg < n && allowed.test(static_cast<std::size_t>(deg))) {
        ZPoly prod{lc};
        for (auto i : idx) {
          prod = zmul(prod, lifted[i]);
          zreduce(prod, modulus);
        }
        for (auto& c : prod)
          if (c > half) c -= modulus;
        IntPolynomial cand(std::move(prod));
        if (cand.degree() > 0) {
          cand = cand.divexact(cand.content());
          if (divides_over_Z(cand, f)) return true;
        }
      }
      // next combination
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == r - size + (pos - 1)) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return false;
}

}  // namespace

bool irreducible_over_Q(const IntPolynomial& f) {
  if (f.is_zero()) throw DomainError("irreducibility of the zero polynomial");
  if (f.degree() < 1) throw DomainError("irreducibility needs degree >= 1");
  if (f.degree() > kMaxIrreducibilityDegree) throw DomainError("irreducibility supported up to degree 16");
  if (f.content() != 1) throw DomainError("irreducibility test requires a primitive polynomial");
  const int n = f.degree();
  if (n == 1) return true;

  const Integer disc = discriminant(f);
  if (disc == 0) return false;  // repeated factor
  const Integer bad = disc * f.leading();

  DegreeSet allowed;
  for (int d = 0; d <= n; ++d) allowed.set(static_cast<std::size_t>(d));
  DegreeSet trivial;
  trivial.set(0);
  trivial.set(static_cast<std::size_t>(n));

  std::uint64_t best_q = 0;
  std::size_t best_count = std::numeric_limits<std::size_t>::max();
  int good = 0;
  for (std::uint64_t q = 3; good < kGoodPrimesToTry; q += 2) {
    if (!is_prime_u64(q)) continue;
    if (mpz_divisible_ui_p(bad.get_mpz_t(), q)) continue;
    ++good;
    const modp::Field F{q};
    modp::Poly fq = modp::monic(modp::reduce(f, F), F);
    auto ddf = modp::distinct_degree(fq, F);
    allowed &= subset_degree_sums(ddf);
    if ((allowed & ~trivial).none()) return true;
    std::size_t count = 0;
    for (const auto& [d, prod] : ddf) count += static_cast<std::size_t>(modp::degree(prod) / d);
    if (count < best_count) {
      best_count = count;
      best_q = q;
    }
  }

  const modp::Field F{best_q};
  modp::Poly fq = modp::monic(modp::reduce(f, F), F);
  std::vector<modp::Poly> factors = modp::factor_squarefree(fq, F, 0x5eedULL ^ best_q);

  const Integer bound = 2 * abs(f.leading()) * factor_coefficient_bound(f);
  unsigned k = 1;
  Integer modulus = static_cast<unsigned long>(best_q);
  while (modulus <= bound) {
    modulus *= static_cast<unsigned long>(best_q);
    ++k;
  }
  // Monic image of f modulo q^k.
  Integer inv_lc;
  if (mpz_invert(inv_lc.get_mpz_t(), f.leading().get_mpz_t(), modulus.get_mpz_t()) == 0)
    throw DomainError("leading coefficient not invertible modulo q^k");
  ZPoly monic_f(f.coeffs().begin(), f.coeffs().end());
  for (auto& c : monic_f) c *= inv_lc;
  zreduce(monic_f, modulus);

  std::vector<ZPoly> lifted;
  hensel_tree(monic_f, factors, 0, factors.size(), F, k, lifted);
  return !find_factor_by_recombination(f, lifted, modulus, allowed);
}

}  // namespace weilcensus
