#include "newman/modmath.hpp"

#include "newman/errors.hpp"

#include <numeric>

namespace newman {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    if (m == 0) throw domain_error("inverse_mod: modulus must be positive");
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) throw domain_error("inverse_mod: arguments are not coprime");
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull}) {
        if (n % d == 0) return n == d;
    }
    // wheel over 6k +- 1
    for (std::uint64_t d = 7; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 4) == 0) return false;
    }
    return true;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
    std::vector<std::uint32_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint32_t p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        out.push_back(p);
        for (std::uint64_t q = static_cast<std::uint64_t>(p) * p; q <= limit; q += p)
            composite[static_cast<std::size_t>(q)] = true;
    }
    return out;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; d == 2 ? d = 3 : d += 2) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

unsigned multiplicative_order(std::uint64_t b, std::uint64_t m) {
    if (m == 0) throw domain_error("multiplicative_order: modulus must be positive");
    if (m == 1) return 1;
    b %= m;
    if (std::gcd(b, m) != 1)
        throw domain_error("multiplicative_order: base and modulus are not coprime");
    if (is_prime(m)) {
        // descend from the group order through its prime factors
        std::uint64_t s = m - 1;
        for (std::uint64_t f : prime_factors(m - 1)) {
            while (s % f == 0 && pow_mod(b, s / f, m) == 1) s /= f;
        }
        return static_cast<unsigned>(s);
    }
    std::uint64_t x = b % m;
    unsigned s = 1;
    while (x != 1) {
        x = mul_mod(x, b, m);
        ++s;
        if (s > m) throw domain_error("multiplicative_order: no order found (not coprime?)");
    }
    return s;
}

} // namespace newman
