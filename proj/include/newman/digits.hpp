#pragma once

#include "newman/bigint.hpp"

#include <functional>
#include <vector>

namespace newman {

// A_b is the set of naturals whose base-b digits are all 0 or 1. Its elements
// are sparse, so a numeral stores the positions of its 1-digits rather than a
// digit array.

/// Element of A_b (or an A_b-normalized bound): base plus a strictly
/// decreasing list of exponents k_1 > ... > k_r carrying digit 1.
/// The empty list is the number 0.
class BaseBNumeral {
public:
    BaseBNumeral(unsigned base, std::vector<unsigned> exponents);

    unsigned base() const { return base_; }
    const std::vector<unsigned>& exponents() const { return exponents_; }

    /// Number of 1-digits (the base-b digit sum of the value).
    unsigned ones() const { return static_cast<unsigned>(exponents_.size()); }

    /// Length of the base-b digit string (1 for zero).
    unsigned digit_count() const { return exponents_.empty() ? 1 : exponents_.front() + 1; }

    bool is_zero() const { return exponents_.empty(); }

    /// The represented integer, sum of b^{k_j}.
    BigInt value() const;

    /// The digit string read as binary: sum of 2^{k_j}. This is the inverse of
    /// rebase and the order-preserving bijection A_b <-> N used by enumeration.
    BigInt binary_compression() const;

    /// Value mod m without materializing the full integer.
    std::uint64_t value_mod(std::uint64_t m) const;

    /// Requires every base-b digit of n to be 0 or 1.
    static BaseBNumeral from_value(const BigInt& n, unsigned base);

    /// Digit string taken from the binary expansion of the counter.
    static BaseBNumeral from_counter(const BigInt& counter, unsigned base);

    bool operator==(const BaseBNumeral& o) const = default;

private:
    unsigned base_;
    std::vector<unsigned> exponents_;
};

/// Sum of the base-b digits of n.
BigInt digit_sum(const BigInt& n, unsigned base);

/// True iff every base-b digit of n is 0 or 1. A_2 = N, so always true for base 2.
bool is_member_ab(const BigInt& n, unsigned base);

/// Smallest M in A_b with M >= N. Preserves the counted set:
/// {n in A_b : n < N} = {n in A_b : n < M}. Requires N >= 1.
BaseBNumeral ceiling_in_ab(const BigInt& n, unsigned base);

/// Reads the binary digits of n as base-b digits (the digit transplant);
/// rebase(n, 2) == n.
BaseBNumeral rebase(const BigInt& n, unsigned base);

/// Calls fn for every n in A_b with n < limit, in increasing order.
/// fn returns false to stop early.
void enumerate_ab(unsigned base, const BigInt& limit,
                  const std::function<bool(const BaseBNumeral&)>& fn);

/// Elements of A_b below limit (convenience for small ranges; guarded at 2^24 values).
std::vector<BaseBNumeral> collect_ab(unsigned base, const BigInt& limit);

} // namespace newman
