#include "weilcensus/orders.hpp"

#include "weilcensus/weil.hpp"

#include <stdexcept>

namespace weilcensus {

namespace {

RatPolynomial mulmod(const RatPolynomial& a, const RatPolynomial& b, const RatPolynomial& f) {
  RatPolynomial q, r;
  (a * b).divmod(f, q, r);
  return r;
}

std::vector<Rational> coordinates(const RatPolynomial& v, std::size_t n) {
  std::vector<Rational> row(n);
  for (std::size_t i = 0; i < n; ++i) row[i] = v[static_cast<int>(i)];
  return row;
}

RatPolynomial from_row(const RatMatrix& m, std::size_t r) {
  std::vector<Rational> c(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) c[j] = m(r, j);
  return RatPolynomial(std::move(c));
}

bool is_integral(const Rational& x) { return x.get_den() == 1; }

}  // namespace

OrderDescription build_R_unchecked(const IntPolynomial& f, const Integer& p) {
  if (!f.is_monic() || f.degree() < 2 || f.degree() % 2 != 0)
    throw DomainError("build_R expects a monic polynomial of even degree");
  const int g = f.degree() / 2;
  const std::size_t n = static_cast<std::size_t>(2 * g);
  if (f[0] == 0) throw DomainError("build_R: pi is not invertible (f(0) = 0)");
  const RatPolynomial rf(f);

  // f = x Q(x) + f(0)  =>  1/pi = -Q(pi) / f(0)
  std::vector<Rational> qcoeffs(n);
  for (std::size_t i = 0; i < n; ++i) qcoeffs[i] = Rational(f[static_cast<int>(i) + 1]);
  const Rational scale = Rational(-1) / Rational(f[0]);
  const RatPolynomial inv_pi = scale * RatPolynomial(std::move(qcoeffs));
  const RatPolynomial pibar = Rational(p) * inv_pi;

  RatMatrix basis(n, n);
  for (int k = 0; k < g; ++k) basis(static_cast<std::size_t>(k), static_cast<std::size_t>(k)) = 1;
  RatPolynomial power = pibar;
  for (int k = 1; k <= g; ++k) {
    if (k > 1) power = mulmod(power, pibar, rf);
    auto row = coordinates(power, n);
    for (std::size_t j = 0; j < n; ++j) basis(static_cast<std::size_t>(g + k - 1), j) = row[j];
  }

  // Index path 1: determinant ratio.
  const Rational det = determinant(basis);
  if (det == 0) throw DomainError("build_R: basis is singular");
  const Rational index_det = Rational(1) / abs(det);

  // Index path 2: Smith form of the scaled integer matrix.
  Integer den = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), basis(i, j).get_den_mpz_t());
  IntMatrix scaled(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) = basis(i, j).get_num() * (den / basis(i, j).get_den());
  Integer prod = 1;
  for (const auto& d : smith_elementary_divisors(scaled)) prod *= d;
  const Rational index_snf = make_rational(ipow(den, static_cast<unsigned long>(n)), prod);
  if (index_snf != index_det || !is_integral(index_snf))
    throw std::logic_error("build_R: index paths disagree (" + index_snf.get_str() + " vs " + index_det.get_str() + ")");

  // Trace form: Tr(b_i b_j) = sum_{l,m} B_il B_jm s_{l+m}.
  const auto s = trace_power_sums(f, 2 * n);
  RatMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational acc = 0;
      for (std::size_t l = 0; l < n; ++l) {
        if (basis(i, l) == 0) continue;
        for (std::size_t m = 0; m < n; ++m)
          if (basis(j, m) != 0) acc += basis(i, l) * basis(j, m) * Rational(s[l + m]);
      }
      gram(i, j) = acc;
      gram(j, i) = acc;
    }
  const Rational disc = determinant(gram);
  if (!is_integral(disc)) throw std::logic_error("build_R: non-integral discriminant " + disc.get_str());

  return OrderDescription{f, std::move(basis), disc.get_num(), index_snf.get_num()};
}

OrderDescription build_R(const IntPolynomial& f, const Integer& p) {
  if (!f.is_monic() || f.degree() < 2 || f.degree() % 2 != 0)
    throw DomainError("build_R expects a monic polynomial of even degree");
  if (!irreducible_over_Q(f)) throw DomainError("build_R: f is reducible over Q");
  if (!is_weil(f, p)) throw DomainError("build_R: f is not a Weil polynomial");
  return build_R_unchecked(f, p);
}

bool ring_closed(const OrderDescription& order) {
  const std::size_t n = order.basis.rows();
  const RatPolynomial rf(order.defining_poly);
  std::vector<RatPolynomial> elems;
  for (std::size_t i = 0; i < n; ++i) elems.push_back(from_row(order.basis, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      auto prod = coordinates(mulmod(elems[i], elems[j], rf), n);
      for (const auto& x : solve_left(order.basis, prod))
        if (!is_integral(x)) return false;
    }
  return true;
}

bool lemma41_holds(const OrderDescription& order, const Integer& p) {
  const unsigned long g = static_cast<unsigned long>(order.defining_poly.degree() / 2);
  return order.index_over_Zpi * order.index_over_Zpi <= ipow(p, g * (g - 1));
}

bool lemma41_check(const IntPolynomial& f, const Integer& p) { return lemma41_holds(build_R(f, p), p); }

RealSubringDescription build_Rplus(const IntPolynomial& f, const Integer& p) {
  IntPolynomial h = real_weil_poly(f, p);
  Integer d = discriminant(h);
  return {std::move(h), std::move(d)};
}

bool lemma49_holds(const RealSubringDescription& rplus, const Integer& p) {
  const unsigned long g = static_cast<unsigned long>(rplus.h.degree());
  return rplus.disc * rplus.disc <= ipow(16 * p, g * (g - 1));
}

bool lemma49_check(const IntPolynomial& f, const Integer& p) { return lemma49_holds(build_Rplus(f, p), p); }

}  // namespace weilcensus
