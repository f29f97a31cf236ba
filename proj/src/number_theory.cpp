#include "pnseq/number_theory.hpp"

#include <cmath>

namespace pnseq::nt {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

int quadratic_character(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  return pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

bool is_primitive_root(std::uint64_t g, std::uint64_t p) {
  if (g % p == 0) return false;
  for (std::uint64_t q : prime_factors(p - 1))
    if (pow_mod(g, (p - 1) / q, p) == 1) return false;
  return true;
}

std::optional<std::uint64_t> hall_parameter(std::uint64_t p) {
  if (p < 27 || (p - 27) % 4) return std::nullopt;
  const std::uint64_t sq = (p - 27) / 4;
  auto a = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(sq)));
  while (a * a > sq) --a;
  while ((a + 1) * (a + 1) <= sq) ++a;
  if (a * a != sq) return std::nullopt;
  return a;
}

std::optional<unsigned> mersenne_exponent(std::uint64_t n) {
  for (unsigned k = 1; k < 64; ++k)
    if (n == (std::uint64_t{1} << k) - 1) return k;
  return std::nullopt;
}

std::optional<std::uint64_t> twin_prime_factor(std::uint64_t n) {
  // p (p + 2) = (p + 1)^2 - 1
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n) + 1.0));
  while (r * r > n + 1) --r;
  while ((r + 1) * (r + 1) <= n + 1) ++r;
  if (r * r != n + 1 || r < 2) return std::nullopt;
  const std::uint64_t p = r - 1;
  if (is_prime(p) && is_prime(p + 2)) return p;
  return std::nullopt;
}

}  // namespace pnseq::nt
