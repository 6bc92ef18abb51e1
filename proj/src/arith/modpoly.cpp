#include "modpoly.hpp"

#include <algorithm>

namespace weilcensus::modp {

std::uint64_t Field::inv(std::uint64_t a) const {
  // Fermat; q is prime.
  std::uint64_t r = 1, b = a % q, e = q - 2;
  if (b == 0) throw DomainError("inverse of zero in F_q");
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly reduce(const IntPolynomial& f, const Field& F) {
  Poly r(f.coeffs().size());
  Integer q = static_cast<unsigned long>(F.q), t;
  for (std::size_t i = 0; i < r.size(); ++i) {
    mpz_fdiv_r(t.get_mpz_t(), f.coeffs()[i].get_mpz_t(), q.get_mpz_t());
    r[i] = t.get_ui();
  }
  trim(r);
  return r;
}

Poly add(const Poly& a, const Poly& b, const Field& F) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, const Field& F) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, const Field& F) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, std::uint64_t c, const Field& F) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  trim(r);
  return r;
}

void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem, const Field& F) {
  if (b.empty()) throw DomainError("division by zero polynomial mod q");
  rem = a;
  const int db = degree(b);
  const int da = degree(a);
  quo.assign(da >= db ? static_cast<std::size_t>(da - db + 1) : 0, 0);
  const std::uint64_t inv_lc = F.inv(b.back());
  for (int i = da; i >= db; --i) {
    const std::uint64_t top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    const std::uint64_t c = F.mul(top, inv_lc);
    quo[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - db + j)];
      slot = F.sub(slot, F.mul(c, b[static_cast<std::size_t>(j)]));
    }
  }
  trim(quo);
  trim(rem);
}

Poly mod(const Poly& a, const Poly& b, const Field& F) {
  Poly q, r;
  divmod(a, b, q, r, F);
  return r;
}

Poly monic(const Poly& a, const Field& F) {
  if (a.empty()) return a;
  return scale(a, F.inv(a.back()), F);
}

Poly gcd(Poly a, Poly b, const Field& F) {
  while (!b.empty()) {
    Poly r = mod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, F);
}

Poly ext_gcd(const Poly& a, const Poly& b, Poly& s, Poly& t, const Field& F) {
  Poly r0 = a, r1 = b;
  Poly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    Poly q, r;
    divmod(r0, r1, q, r, F);
    Poly s2 = sub(s0, mul(q, s1, F), F);
    Poly t2 = sub(t0, mul(q, t1, F), F);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) throw DomainError("ext_gcd of two zero polynomials");
  const std::uint64_t inv = F.inv(r0.back());
  s = scale(s0, inv, F);
  t = scale(t0, inv, F);
  return scale(r0, inv, F);
}

Poly powmod(const Poly& base, const Integer& e, const Poly& m, const Field& F) {
  Poly result{1};
  result = mod(result, m, F);
  Poly b = mod(base, m, F);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mod(mul(result, result, F), m, F);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mod(mul(result, b, F), m, F);
  }
  return result;
}

std::vector<std::pair<int, Poly>> distinct_degree(const Poly& f_in, const Field& F) {
  std::vector<std::pair<int, Poly>> out;
  Poly f = monic(f_in, F);
  const Poly x{0, 1};
  Poly h = mod(x, f, F);
  const Integer q = static_cast<unsigned long>(F.q);
  for (int d = 1; 2 * d <= degree(f); ++d) {
    h = powmod(h, q, f, F);
    Poly g = gcd(f, sub(h, x, F), F);
    if (degree(g) > 0) {
      out.emplace_back(d, g);
      Poly quo, rem;
      divmod(f, g, quo, rem, F);
      f = quo;
      h = mod(h, f, F);
    }
  }
  if (degree(f) > 0) out.emplace_back(degree(f), f);
  return out;
}

void equal_degree(const Poly& f, int d, const Field& F, std::mt19937_64& rng, std::vector<Poly>& out) {
  const int n = degree(f);
  if (n == d) {
    out.push_back(f);
    return;
  }
  Integer e = 1;
  for (int i = 0; i < d; ++i) e *= static_cast<unsigned long>(F.q);
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> dist(0, F.q - 1);
  for (;;) {
    Poly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (degree(a) < 1) continue;
    Poly g = gcd(a, f, F);
    if (degree(g) > 0 && degree(g) < n) {
      Poly quo, rem;
      divmod(f, g, quo, rem, F);
      equal_degree(g, d, F, rng, out);
      equal_degree(monic(quo, F), d, F, rng, out);
      return;
    }
    Poly b = sub(powmod(a, e, f, F), Poly{1}, F);
    g = gcd(b, f, F);
    if (degree(g) > 0 && degree(g) < n) {
      Poly quo, rem;
      divmod(f, g, quo, rem, F);
      equal_degree(g, d, F, rng, out);
      equal_degree(monic(quo, F), d, F, rng, out);
      return;
    }
  }
}

std::vector<Poly> factor_squarefree(const Poly& f, const Field& F, std::uint64_t seed) {
  if (F.q == 2) throw DomainError("equal-degree splitting requires odd q");
  std::mt19937_64 rng(seed);
  std::vector<Poly> out;
  for (auto& [d, g] : distinct_degree(f, F)) equal_degree(g, d, F, rng, out);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

}  // namespace weilcensus::modp
