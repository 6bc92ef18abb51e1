#include "weilcensus/orders.hpp"

#include <cstdlib>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace weilcensus {

namespace {

bool squarefree(std::int64_t m) {
  m = std::llabs(m);
  for (std::int64_t q = 2; q * q <= m; ++q) {
    if (m % q) continue;
    m /= q;
    if (m % q == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> prime_divisors(std::int64_t m) {
  std::vector<std::int64_t> out;
  m = std::llabs(m);
  for (std::int64_t q = 2; q * q <= m; ++q) {
    if (m % q) continue;
    out.push_back(q);
    while (m % q == 0) m /= q;
  }
  if (m > 1) out.push_back(m);
  return out;
}

std::int64_t mod4(std::int64_t x) { return ((x % 4) + 4) % 4; }

}  // namespace

bool is_quadratic_discriminant(std::int64_t D) {
  return D != 0 && (mod4(D) == 0 || mod4(D) == 1);
}

bool is_fundamental_discriminant(std::int64_t d) {
  if (d == 1) return false;
  if (mod4(d) == 1) return squarefree(d);
  if (mod4(d) != 0) return false;
  const std::int64_t m = d / 4;
  return (mod4(m) == 2 || mod4(m) == 3) && squarefree(m);
}

std::pair<std::int64_t, std::int64_t> quadratic_decompose(std::int64_t D) {
  if (D >= 0) throw DomainError("quadratic_decompose: D must be negative, got " + std::to_string(D));
  if (!is_quadratic_discriminant(D)) throw DomainError("quadratic_decompose: D is not 0 or 1 mod 4");
  // D = f^2 s with s squarefree
  std::int64_t s = -1, f = 1, m = -D;
  for (std::int64_t q = 2; q * q <= m; ++q) {
    while (m % (q * q) == 0) {
      m /= q * q;
      f *= q;
    }
    if (m % q == 0) {
      m /= q;
      s *= q;
    }
  }
  s *= m;
  if (mod4(s) == 1) return {s, f};
  // s = 2, 3 mod 4: D = 4s (f/2)^2 and f is necessarily even
  return {4 * s, f / 2};
}

std::int64_t class_number_form_count(std::int64_t D) {
  if (D >= 0 || !is_quadratic_discriminant(D))
    throw DomainError("class_number_form_count: D must be a negative discriminant");
  const std::int64_t absD = -D;
  std::int64_t h = 0;
  for (std::int64_t a = 1; 3 * a * a <= absD; ++a) {
    // b has the parity of D
    const std::int64_t b0 = ((-a + 1 - D) & 1) ? -a + 2 : -a + 1;
    for (std::int64_t b = b0; b <= a; b += 2) {
      const std::int64_t num = b * b - D;
      if (num % (4 * a)) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (c == a && b < 0) continue;
      if (std::gcd(std::gcd(a, std::llabs(b)), c) != 1) continue;
      ++h;
    }
  }
  return h;
}

std::int64_t fundamental_class_number(std::int64_t d_K) {
  if (d_K >= 0 || !is_fundamental_discriminant(d_K))
    throw DomainError("fundamental_class_number: not a negative fundamental discriminant");
  static std::mutex memo_mutex;
  static std::unordered_map<std::int64_t, std::int64_t> memo;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    if (auto it = memo.find(d_K); it != memo.end()) return it->second;
  }
  const std::int64_t n = -d_K;
  const std::int64_t w = d_K == -3 ? 6 : d_K == -4 ? 4 : 2;
  // Half-range form of the analytic formula:
  // h = (w/2) / (2 - chi(2)) * sum_{0 < a < |d|/2} chi(a).
  // chi(a) = (d_K | a) is completely multiplicative: evaluate on primes only.
  const std::int64_t limit = (n - 1) / 2 + 1;  // a ranges over [1, limit)
  std::vector<std::int32_t> spf(static_cast<std::size_t>(limit), 0);
  std::vector<std::int8_t> chi(static_cast<std::size_t>(limit), 0);
  std::vector<std::int64_t> primes;
  std::int64_t sum = 0;
  if (limit > 1) {
    chi[1] = 1;
    sum = 1;
  }
  for (std::int64_t a = 2; a < limit; ++a) {
    if (spf[a] == 0) {
      spf[a] = static_cast<std::int32_t>(a);
      primes.push_back(a);
      chi[a] = static_cast<std::int8_t>(kronecker(d_K, a));
    } else {
      chi[a] = static_cast<std::int8_t>(chi[spf[a]] * chi[a / spf[a]]);
    }
    for (std::int64_t q : primes) {
      if (q > spf[a] || q * a >= limit) break;
      spf[q * a] = static_cast<std::int32_t>(q);
    }
    sum += chi[a];
  }
  const std::int64_t num = w * sum;
  const std::int64_t den = 2 * (2 - kronecker(d_K, 2));
  if (num % den != 0 || num <= 0)
    throw std::logic_error("fundamental_class_number: non-integral result for d_K = " + std::to_string(d_K));
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo.emplace(d_K, num / den);
  return num / den;
}

std::int64_t unit_index(std::int64_t d_K, std::int64_t c) {
  if (c <= 1) return 1;
  if (d_K == -3) return 3;
  if (d_K == -4) return 2;
  return 1;
}

std::int64_t class_number_conductor_formula(std::int64_t d_K, std::int64_t c) {
  if (c < 1) throw DomainError("class_number_conductor_formula: conductor must be positive");
  Integer num = Integer(fundamental_class_number(d_K)) * c;
  Integer den = unit_index(d_K, c);
  for (std::int64_t l : prime_divisors(c)) {
    num *= l - kronecker(d_K, l);
    den *= l;
  }
  if (num % den != 0) throw std::logic_error("class_number_conductor_formula: non-integral result");
  return to_int64(Integer(num / den));
}

std::vector<QuadraticOrder> orders_between(std::int64_t D_pi) {
  const auto [d_K, c] = quadratic_decompose(D_pi);
  std::vector<QuadraticOrder> out;
  for (std::int64_t cp = 1; cp <= c; ++cp) {
    if (c % cp) continue;
    const std::int64_t D = cp * cp * d_K;
    const std::int64_t by_forms = class_number_form_count(D);
    const std::int64_t by_formula = class_number_conductor_formula(d_K, cp);
    if (by_forms != by_formula)
      throw std::logic_error("class number routes disagree at D = " + std::to_string(D) + ": " +
                             std::to_string(by_forms) + " vs " + std::to_string(by_formula));
    out.push_back({D, d_K, cp, by_forms});
  }
  return out;
}

std::vector<QuadraticOrder> orders_between(std::int64_t p, std::int64_t a) {
  if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p))) throw DomainError("orders_between: p must be prime");
  if (a % p == 0) throw DomainError("orders_between: trace " + std::to_string(a) + " is not ordinary");
  const std::int64_t D = a * a - 4 * p;
  if (D >= 0) throw DomainError("orders_between: a^2 - 4p must be negative");
  return orders_between(D);
}

}  // namespace weilcensus
