#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace newman {

// Arbitrary-precision integer. Signed counts reach ~2^k for bounds b^k with
// k around 10^3, so machine words are not an option.
using BigInt = mpz_class;

inline BigInt big_pow(unsigned long base, unsigned long exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline int sign_of(const BigInt& x) { return mpz_sgn(x.get_mpz_t()); }

inline std::string to_string(const BigInt& x) { return x.get_str(); }

/// Number of decimal digits (1 for zero); sign excluded.
inline std::size_t decimal_digits(const BigInt& x) {
    if (x == 0) return 1;
    return mpz_sizeinbase(x.get_mpz_t(), 10);
}

inline unsigned long popcount(const BigInt& x) {
    return mpz_popcount(x.get_mpz_t());
}

inline bool bit_test(const BigInt& x, unsigned long pos) {
    return mpz_tstbit(x.get_mpz_t(), pos) != 0;
}

/// Position of the most significant set bit, or -1 for zero.
inline long top_bit(const BigInt& x) {
    if (x == 0) return -1;
    return static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2)) - 1;
}

} // namespace newman
