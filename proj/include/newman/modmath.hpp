#pragma once

#include <cstdint>
#include <vector>

namespace newman {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Modular inverse of a mod m; requires gcd(a, m) = 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

/// Trial-division primality; intended for the desk-scale range (< 2^40 or so).
bool is_prime(std::uint64_t n);

/// Primes p <= limit, ascending.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

/// Distinct prime factors by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Least s >= 1 with b^s = 1 mod m. Requires m >= 1 and gcd(b, m) = 1.
/// Computed by factoring the group order lambda-style: start from m-1 for prime m,
/// otherwise fall back to iteration (moduli here are small).
unsigned multiplicative_order(std::uint64_t b, std::uint64_t m);

/// Centered representative of r mod p in (-p/2, p/2).
inline std::int64_t centered(std::uint64_t r, std::uint64_t p) {
    r %= p;
    return (2 * r > p) ? static_cast<std::int64_t>(r) - static_cast<std::int64_t>(p)
                       : static_cast<std::int64_t>(r);
}

} // namespace newman
