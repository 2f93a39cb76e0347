#include "newman/digits.hpp"

#include "newman/errors.hpp"
#include "newman/modmath.hpp"

#include <algorithm>
#include <cassert>

namespace newman {

namespace {

void require_base(unsigned base) {
    if (base < 2) throw domain_error("base must be >= 2");
}

// Little-endian base-b digits of n.
std::vector<unsigned> digits_of(BigInt n, unsigned base) {
    std::vector<unsigned> d;
    while (n != 0) {
        d.push_back(static_cast<unsigned>(mpz_tdiv_q_ui(n.get_mpz_t(), n.get_mpz_t(), base)));
    }
    return d;
}

} // namespace

BaseBNumeral::BaseBNumeral(unsigned base, std::vector<unsigned> exponents)
    : base_(base), exponents_(std::move(exponents)) {
    require_base(base_);
    for (std::size_t i = 1; i < exponents_.size(); ++i) {
        if (exponents_[i - 1] <= exponents_[i])
            throw domain_error("numeral exponents must be strictly decreasing");
    }
}

BigInt BaseBNumeral::value() const {
    BigInt v = 0;
    for (unsigned k : exponents_) v += big_pow(base_, k);
    return v;
}

BigInt BaseBNumeral::binary_compression() const {
    BigInt v = 0;
    for (unsigned k : exponents_) mpz_setbit(v.get_mpz_t(), k);
    return v;
}

std::uint64_t BaseBNumeral::value_mod(std::uint64_t m) const {
    if (m == 1) return 0;
    std::uint64_t r = 0;
    for (unsigned k : exponents_) r = (r + pow_mod(base_, k, m)) % m;
    return r;
}

BaseBNumeral BaseBNumeral::from_value(const BigInt& n, unsigned base) {
    require_base(base);
    if (n < 0) throw domain_error("numerals represent non-negative integers");
    std::vector<unsigned> exps;
    const auto d = digits_of(n, base);
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] > 1) throw domain_error("value is not a member of A_b");
        if (d[i] == 1) exps.push_back(static_cast<unsigned>(i));
    }
    return BaseBNumeral(base, std::move(exps));
}

BaseBNumeral BaseBNumeral::from_counter(const BigInt& counter, unsigned base) {
    require_base(base);
    if (counter < 0) throw domain_error("counter must be non-negative");
    std::vector<unsigned> exps;
    for (long k = top_bit(counter); k >= 0; --k) {
        if (bit_test(counter, static_cast<unsigned long>(k)))
            exps.push_back(static_cast<unsigned>(k));
    }
    return BaseBNumeral(base, std::move(exps));
}

BigInt digit_sum(const BigInt& n, unsigned base) {
    require_base(base);
    if (n < 0) throw domain_error("digit_sum expects a non-negative integer");
    BigInt s = 0;
    BigInt rest = n;
    while (rest != 0) {
        s += mpz_tdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), base);
    }
    return s;
}

bool is_member_ab(const BigInt& n, unsigned base) {
    require_base(base);
    if (n < 0) return false;
    if (base == 2) return true;
    BigInt rest = n;
    while (rest != 0) {
        if (mpz_tdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), base) > 1) return false;
    }
    return true;
}

BaseBNumeral ceiling_in_ab(const BigInt& n, unsigned base) {
    require_base(base);
    if (n < 1) throw domain_error("ceiling_in_ab: bound must be >= 1 (no numbers below 0)");

    auto d = digits_of(n, base);
    d.push_back(0); // headroom for a final carry

    // Highest position holding a digit >= 2. Everything above it is 0/1.
    std::size_t bad = d.size();
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] > 1) { bad = i; break; }
    }
    if (bad != d.size()) {
        // Minimal A_b value above n: binary-style increment at bad+1, clear below.
        std::size_t j = bad + 1;
        while (d[j] == 1) d[j++] = 0;
        d[j] = 1;
        for (std::size_t i = 0; i <= bad; ++i) d[i] = 0;
    }
    std::vector<unsigned> exps;
    for (std::size_t i = d.size(); i-- > 0;)
        if (d[i] == 1) exps.push_back(static_cast<unsigned>(i));
    return BaseBNumeral(base, std::move(exps));
}

BaseBNumeral rebase(const BigInt& n, unsigned base) {
    return BaseBNumeral::from_counter(n, base);
}

void enumerate_ab(unsigned base, const BigInt& limit,
                  const std::function<bool(const BaseBNumeral&)>& fn) {
    require_base(base);
    if (limit < 1) return;
    const BigInt cmax = ceiling_in_ab(limit, base).binary_compression();
    for (BigInt c = 0; c < cmax; ++c) {
        if (!fn(BaseBNumeral::from_counter(c, base))) return;
    }
}

std::vector<BaseBNumeral> collect_ab(unsigned base, const BigInt& limit) {
    if (limit >= 1) {
        const BigInt cmax = ceiling_in_ab(limit, base).binary_compression();
        if (cmax > (BigInt(1) << 24))
            throw resource_error("collect_ab: more than 2^24 elements requested");
    }
    std::vector<BaseBNumeral> out;
    enumerate_ab(base, limit, [&](const BaseBNumeral& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

} // namespace newman
