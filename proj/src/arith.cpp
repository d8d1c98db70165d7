#include "spectra/arith.hpp"

#include <numeric>

namespace spectra::arith {

std::uint32_t gcd(std::uint32_t a, std::uint32_t b) { return std::gcd(a, b); }

std::uint32_t lcm(std::uint32_t a, std::uint32_t b) {
  if (a == 0 || b == 0) return 0;
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a / gcd(a, b)) * b);
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> primes;
  for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

std::uint32_t radical(std::uint32_t n) {
  std::uint32_t r = 1;
  for (std::uint32_t p : prime_factors(n)) r *= p;
  return r;
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  auto primes = prime_factors(n);
  return primes.size() == 1 && primes.front() == n;
}

bool is_prime_power(std::uint32_t n) { return n >= 2 && prime_factors(n).size() == 1; }

std::vector<std::uint32_t> divisors(std::uint32_t n) {
  std::vector<std::uint32_t> low;
  std::vector<std::uint32_t> high;
  for (std::uint32_t d = 1; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::optional<std::uint32_t> inverse_mod(std::uint32_t a, std::uint32_t n) {
  if (n == 1) return 0;
  std::int64_t old_r = a % n, r = n;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) return std::nullopt;
  std::int64_t inv = old_s % static_cast<std::int64_t>(n);
  if (inv < 0) inv += n;
  return static_cast<std::uint32_t>(inv);
}

}  // namespace spectra::arith
