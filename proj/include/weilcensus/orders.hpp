#ifndef WEILCENSUS_ORDERS_HPP
#define WEILCENSUS_ORDERS_HPP

#include "weilcensus/arith.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace weilcensus {

/// A full-rank subring of Q[x]/(f). Row i of `basis` holds the i-th basis
/// element in the power basis 1, pi, ..., pi^{2g-1}.
struct OrderDescription {
  IntPolynomial defining_poly;
  RatMatrix basis;
  Integer disc;
  Integer index_over_Zpi;
};

/// R = Z[pi, p/pi] with basis 1, pi, ..., pi^{g-1}, pibar, ..., pibar^g.
///
/// pibar = p / pi is obtained from f(pi) = 0 by exact inversion. The
/// discriminant is det(Tr(b_i b_j)) using Newton power sums, and the index
/// [R : Z[pi]] comes from the Smith form of the denominator-cleared basis,
/// cross-checked against 1 / |det basis|.
OrderDescription build_R(const IntPolynomial& f, const Integer& p);

/// Same construction without the irreducibility/Weil preconditions, for use
/// inside sweeps that have already established them.
OrderDescription build_R_unchecked(const IntPolynomial& f, const Integer& p);

/// Every product of two basis elements is an integral combination of the basis.
bool ring_closed(const OrderDescription& order);

/// [R : Z[pi]]^2 <= p^{g(g-1)}.
bool lemma41_check(const IntPolynomial& f, const Integer& p);
bool lemma41_holds(const OrderDescription& order, const Integer& p);

/// R+ = Z[pi + pibar], described by the real Weil polynomial h.
struct RealSubringDescription {
  IntPolynomial h;
  Integer disc;
};

RealSubringDescription build_Rplus(const IntPolynomial& f, const Integer& p);

/// disc(h)^2 <= (16 p)^{g(g-1)}, i.e. |disc(h)| <= (4 sqrt p)^{g(g-1)}.
bool lemma49_check(const IntPolynomial& f, const Integer& p);
bool lemma49_holds(const RealSubringDescription& rplus, const Integer& p);

// --- imaginary quadratic orders -------------------------------------------

struct QuadraticOrder {
  std::int64_t D;
  std::int64_t d_K;
  std::int64_t c;
  std::int64_t class_number;

  friend bool operator==(const QuadraticOrder&, const QuadraticOrder&) = default;
};

bool is_quadratic_discriminant(std::int64_t D);
bool is_fundamental_discriminant(std::int64_t d);

/// D = c^2 d_K with d_K fundamental. Returns {d_K, c}.
std::pair<std::int64_t, std::int64_t> quadratic_decompose(std::int64_t D);

/// Number of reduced primitive positive definite forms (a, b, c) of discriminant D.
std::int64_t class_number_form_count(std::int64_t D);

/// h(d_K) from Dirichlet's analytic class number formula, in the half-range
/// form h = (w/2) / (2 - (d|2)) * sum_{0<a<|d|/2} (d|a). Memoized.
std::int64_t fundamental_class_number(std::int64_t d_K);

/// [O_K^x : O^x] for the order of conductor c.
std::int64_t unit_index(std::int64_t d_K, std::int64_t c);

/// h(c^2 d_K) = h(d_K) c prod_{l | c} (1 - (d_K|l)/l) / [O_K^x : O^x].
std::int64_t class_number_conductor_formula(std::int64_t d_K, std::int64_t c);

/// Orders containing Z[pi] for disc(Z[pi]) = D_pi: one per divisor of the
/// conductor, each with both class numbers computed and required to agree.
std::vector<QuadraticOrder> orders_between(std::int64_t D_pi);

/// Same, validating that D_pi = a^2 - 4p comes from an ordinary trace.
std::vector<QuadraticOrder> orders_between(std::int64_t p, std::int64_t a);

}  // namespace weilcensus

#endif
