#include "weilcensus/arith.hpp"

namespace weilcensus {

IntMatrix sylvester_matrix(const IntPolynomial& f, const IntPolynomial& g) {
  const int m = f.degree();
  const int n = g.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  IntMatrix s(size, size);
  // n shifted rows of f followed by m shifted rows of g, highest degree first.
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s(static_cast<std::size_t>(r), static_cast<std::size_t>(r + i)) = f[m - i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s(static_cast<std::size_t>(n + r), static_cast<std::size_t>(r + i)) = g[n - i];
  return s;
}

Integer resultant(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant of the zero polynomial");
  if (f.degree() == 0 && g.degree() == 0) return 1;
  if (f.degree() == 0) return ipow(f[0], static_cast<unsigned long>(g.degree()));
  if (g.degree() == 0) return ipow(g[0], static_cast<unsigned long>(f.degree()));
  return determinant(sylvester_matrix(f, g));
}

Integer discriminant(const IntPolynomial& f) {
  if (f.is_zero() || f.degree() < 1) throw DomainError("discriminant needs degree >= 1");
  const long n = f.degree();
  Integer res = resultant(f, f.derivative());
  Integer d;
  mpz_divexact(d.get_mpz_t(), res.get_mpz_t(), f.leading().get_mpz_t());
  if (((n * (n - 1)) / 2) % 2 != 0) d = -d;
  return d;
}

std::vector<Integer> trace_power_sums(const IntPolynomial& f, std::size_t kmax) {
  if (!f.is_monic()) throw DomainError("trace_power_sums requires a monic polynomial");
  const int n = f.degree();
  std::vector<Integer> s(kmax + 1);
  s[0] = n;
  // f = x^n + c_{n-1} x^{n-1} + ... + c_0
  for (std::size_t k = 1; k <= kmax; ++k) {
    Integer acc = 0;
    const int ik = static_cast<int>(k);
    for (int i = 1; i <= std::min(ik - 1, n); ++i) acc += f[n - i] * s[k - static_cast<std::size_t>(i)];
    if (ik <= n) acc += f[n - ik] * static_cast<unsigned long>(k);
    s[k] = -acc;
  }
  return s;
}

int kronecker(std::int64_t a, std::int64_t n) {
  if (n < 0) throw DomainError("kronecker: negative modulus");
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n % 2 == 0) {
    if (a % 2 == 0) return 0;
    int v = 0;
    while (n % 2 == 0) {
      n /= 2;
      ++v;
    }
    const std::int64_t r8 = ((a % 8) + 8) % 8;
    if ((v & 1) && (r8 == 3 || r8 == 5)) result = -result;
  }
  // Jacobi symbol for odd n
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r8 = n % 8;
      if (r8 == 3 || r8 == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (!n.fits_ulong_p()) throw DomainError("primality test limited to 64-bit integers");
  return is_prime_u64(n.get_ui());
}

}  // namespace weilcensus
