#include "weilcensus/weil.hpp"

namespace weilcensus {

namespace {

// Largest t >= 0 with (g t)^2 <= n.
Integer scaled_isqrt(const Integer& n, int g) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r / g;
}

}  // namespace

YgEnumerator::YgEnumerator(const WeilParams& params) : params_(params) {
  const int g = params.g();
  const Integer& p = params.p();
  count_ = 1;
  for (int i = 1; i < g; ++i) {
    bounds_.push_back(scaled_isqrt(ipow(p, static_cast<unsigned long>(i)), g));
    sizes_.push_back(2 * bounds_.back() + 1);
    count_ *= sizes_.back();
  }
  const Integer b = scaled_isqrt(4 * ipow(p, static_cast<unsigned long>(g)), g);
  bounds_.push_back(b);
  sizes_.push_back(2 * (b - b / p));  // nonzero values coprime to p
  count_ *= sizes_.back();
}

std::uint64_t YgEnumerator::count_within(std::uint64_t budget) const {
  if (count_ > Integer(static_cast<unsigned long>(budget)))
    throw ResourceError("|Y_g| = " + count_.get_str() + " exceeds the enumeration budget " + std::to_string(budget));
  return count_.get_ui();
}

Integer YgEnumerator::coordinate_value(int i, const Integer& position) const {
  const Integer& b = bounds_[static_cast<std::size_t>(i)];
  if (i + 1 < params_.g()) return position - b;
  // Last coordinate: -B..-1 then 1..B, skipping multiples of p.
  const Integer& p = params_.p();
  const Integer half = sizes_[static_cast<std::size_t>(i)] / 2;
  auto kth_coprime = [&](const Integer& k) -> Integer {  // k >= 1
    return k + (k - 1) / (p - 1);
  };
  if (position < half) return -kth_coprime(half - position);
  return kth_coprime(position - half + 1);
}

CoefficientVector YgEnumerator::at(std::uint64_t index) const {
  Integer rem = static_cast<unsigned long>(index);
  if (rem >= count_) throw DomainError("Y_g index out of range");
  const int g = params_.g();
  CoefficientVector a(static_cast<std::size_t>(g));
  for (int i = g - 1; i >= 0; --i) {
    Integer pos;
    mpz_fdiv_qr(rem.get_mpz_t(), pos.get_mpz_t(), rem.get_mpz_t(), sizes_[static_cast<std::size_t>(i)].get_mpz_t());
    a[static_cast<std::size_t>(i)] = coordinate_value(i, pos);
  }
  return a;
}

void YgEnumerator::for_each(std::uint64_t begin, std::uint64_t end,
                            const std::function<void(std::uint64_t, const CoefficientVector&)>& visit) const {
  for (std::uint64_t idx = begin; idx < end; ++idx) visit(idx, at(idx));
}

Integer count_Yg(const WeilParams& params) { return YgEnumerator(params).count(); }

}  // namespace weilcensus
