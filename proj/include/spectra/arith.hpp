#pragma once

#include <cstdint>
#include <optional>
#include <vector>

// Small number-theoretic helpers on 32-bit moduli.
namespace spectra::arith {

std::uint32_t gcd(std::uint32_t a, std::uint32_t b);

// lcm(a, b) where both divide some 32-bit modulus, so the result fits.
std::uint32_t lcm(std::uint32_t a, std::uint32_t b);

// Distinct prime divisors in increasing order; empty for n = 1.
std::vector<std::uint32_t> prime_factors(std::uint32_t n);

// Product of the distinct primes dividing n (rad(1) = 1).
std::uint32_t radical(std::uint32_t n);

bool is_prime(std::uint32_t n);

// True when n = p^k for a prime p and k >= 1.
bool is_prime_power(std::uint32_t n);

// Positive divisors of n in increasing order.
std::vector<std::uint32_t> divisors(std::uint32_t n);

// Inverse of a modulo n, if gcd(a, n) = 1.
std::optional<std::uint32_t> inverse_mod(std::uint32_t a, std::uint32_t n);

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t n) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % n);
}

inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t n) {
  std::uint64_t s = static_cast<std::uint64_t>(a) + b;
  return static_cast<std::uint32_t>(s >= n ? s - n : s);
}

}  // namespace spectra::arith
