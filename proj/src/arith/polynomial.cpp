#include "weilcensus/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace weilcensus {

namespace {
const Integer kZero = 0;
const Rational kRatZero = 0;
}  // namespace

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(const Integer& c, int degree) {
  if (degree < 0) throw DomainError("negative monomial degree");
  std::vector<Integer> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPolynomial::operator[](int i) const {
  if (i < 0 || i > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Integer& IntPolynomial::leading() const {
  if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(d));
}

Integer IntPolynomial::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPolynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial IntPolynomial::divexact(const Integer& c) const {
  if (c == 0) throw DomainError("division by zero");
  std::vector<Integer> r(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!mpz_divisible_p(coeffs_[i].get_mpz_t(), c.get_mpz_t()))
      throw DomainError("inexact coefficient division");
    mpz_divexact(r[i].get_mpz_t(), coeffs_[i].get_mpz_t(), c.get_mpz_t());
  }
  return IntPolynomial(std::move(r));
}

std::string IntPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = (*this)[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

IntPolynomial pow(const IntPolynomial& f, unsigned e) {
  IntPolynomial result = IntPolynomial::constant(1);
  IntPolynomial base = f;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------

RatPolynomial::RatPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPolynomial::RatPolynomial(const IntPolynomial& f) {
  coeffs_.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) coeffs_.emplace_back(c);
}

void RatPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& RatPolynomial::operator[](int i) const {
  if (i < 0 || i > degree()) return kRatZero;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& RatPolynomial::leading() const {
  if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational RatPolynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPolynomial RatPolynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return RatPolynomial(std::move(d));
}

RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b) {
  std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[static_cast<int>(i)] - b[static_cast<int>(i)];
  return RatPolynomial(std::move(r));
}

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RatPolynomial(std::move(r));
}

RatPolynomial operator*(const Rational& c, const RatPolynomial& a) {
  std::vector<Rational> r(a.coeffs_);
  for (auto& x : r) x *= c;
  return RatPolynomial(std::move(r));
}

void RatPolynomial::divmod(const RatPolynomial& d, RatPolynomial& q, RatPolynomial& r) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const int dd = d.degree();
  const int n = degree();
  std::vector<Rational> quo(n >= dd ? static_cast<std::size_t>(n - dd + 1) : 0);
  const Rational& lc = d.leading();
  for (int i = n; i >= dd; --i) {
    const Rational& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    Rational factor = top / lc;
    quo[static_cast<std::size_t>(i - dd)] = factor;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= factor * d[j];
  }
  if (rem.size() > static_cast<std::size_t>(std::max(dd, 0))) rem.resize(static_cast<std::size_t>(std::max(dd, 0)));
  q = RatPolynomial(std::move(quo));
  r = RatPolynomial(std::move(rem));
}

RatPolynomial RatPolynomial::monic() const {
  if (is_zero()) return {};
  return Rational(1) / leading() * *this;
}

IntPolynomial RatPolynomial::primitive_part() const {
  if (is_zero()) return {};
  Integer den = 1;
  for (const auto& c : coeffs_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i].get_num() * (den / coeffs_[i].get_den());
  IntPolynomial p(std::move(v));
  return p.divexact(p.content());
}

RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    RatPolynomial q, r;
    a.divmod(b, q, r);
    a = std::move(b);
    b = RatPolynomial(r.primitive_part());
  }
  return a.monic();
}

bool divides_over_Z(const IntPolynomial& g, const IntPolynomial& f, IntPolynomial* quotient) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  if (f.is_zero()) {
    if (quotient) *quotient = {};
    return true;
  }
  if (f.degree() < g.degree()) return false;
  std::vector<Integer> rem(f.coeffs().begin(), f.coeffs().end());
  std::vector<Integer> quo(static_cast<std::size_t>(f.degree() - g.degree() + 1));
  const int dg = g.degree();
  const Integer& lc = g.leading();
  for (int i = f.degree(); i >= dg; --i) {
    Integer& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return false;
    Integer factor;
    mpz_divexact(factor.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    quo[static_cast<std::size_t>(i - dg)] = factor;
    for (int j = 0; j <= dg; ++j) rem[static_cast<std::size_t>(i - dg + j)] -= factor * g[j];
  }
  for (int i = 0; i < dg; ++i)
    if (rem[static_cast<std::size_t>(i)] != 0) return false;
  if (quotient) *quotient = IntPolynomial(std::move(quo));
  return true;
}

}  // namespace weilcensus
