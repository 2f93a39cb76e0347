#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "newman/discrepancy.hpp"
#include "newman/errors.hpp"
#include "newman/modmath.hpp"

#include <random>

using namespace newman;

namespace {

// Test-side oracle, independent of the library's evaluators: walk every
// integer below the bound, keep A_b members in the residue class, and sum
// signs from a freshly computed digit sum.
long oracle(unsigned b, unsigned q, unsigned i, long bound) {
    long s = 0;
    for (long n = 0; n < bound; ++n) {
        long rest = n;
        long dsum = 0;
        bool member = true;
        while (rest != 0) {
            const long d = rest % b;
            if (d > 1) { member = false; break; }
            dsum += d;
            rest /= b;
        }
        if (!member) continue;
        if (n % q != i) continue;
        s += (dsum % 2 == 0) ? 1 : -1;
    }
    return s;
}

} // namespace

TEST_CASE("brute-force evaluator matches the hand oracle") {
    CHECK(eval_bruteforce({2, 3, 0, BigInt(4)}) == 2);
    CHECK(eval_bruteforce({4, 5, 0, BigInt(16)}) == 2);
    CHECK(eval_bruteforce({2, 3, 1, BigInt(4)}) == -1);
    for (unsigned b : {2u, 3u, 5u})
        for (unsigned q : {1u, 2u, 7u})
            CHECK(eval_bruteforce({b, q, 0, BigInt(1)}) == 1);

    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        const unsigned b = 2 + static_cast<unsigned>(rng() % 9);
        const unsigned q = 1 + static_cast<unsigned>(rng() % 12);
        const unsigned i = static_cast<unsigned>(rng() % q);
        const long bound = 1 + static_cast<long>(rng() % 2000);
        CHECK(eval_bruteforce({b, q, i, BigInt(bound)}) == oracle(b, q, i, bound));
    }
}

TEST_CASE("power_column basics") {
    CHECK(power_column(2, 3, 0, 2) == 2);
    CHECK(power_column(2, 3, 0, 3) == 3);
    for (unsigned k = 1; k <= 20; ++k)
        for (unsigned b : {2u, 5u, 9u})
            CHECK(power_column(b, 1, 0, k) == 0);
    CHECK(power_column(2, 1, 0, 0) == 1);

    // against brute force over the 2^k digit choices
    for (unsigned b : {2u, 3u, 4u, 6u}) {
        for (unsigned q : {2u, 3u, 5u, 6u, 8u}) {
            for (unsigned k = 0; k <= 9; ++k) {
                for (unsigned i = 0; i < q; ++i) {
                    const DiscrepancyQuery query(b, q, i, BaseBNumeral(b, {k}));
                    CHECK(power_column(b, q, i, k) == eval_bruteforce(query));
                }
            }
        }
    }
}

TEST_CASE("power_column handles gcd(b, q) > 1") {
    for (unsigned k = 0; k <= 10; ++k) {
        for (unsigned i = 0; i < 10; ++i) {
            const DiscrepancyQuery query(4, 10, i, BaseBNumeral(4, {k}));
            CHECK(power_column(4, 10, i, k) == eval_bruteforce(query));
        }
        for (unsigned i = 0; i < 6; ++i) {
            const DiscrepancyQuery query(6, 6, i, BaseBNumeral(6, {k}));
            CHECK(power_column(6, 6, i, k) == eval_bruteforce(query));
        }
    }
}

TEST_CASE("recursive evaluator") {
    // 17 = 4^2 + 4^0; the second telescoped term lands in an empty class
    CHECK(eval_recursive({4, 5, 0, BigInt(17)}) == 2);
    CHECK(power_column(4, 5, 4, 0) == 0);

    // single-power bounds reduce to the column itself
    for (unsigned k = 0; k <= 12; ++k)
        CHECK(eval_recursive({2, 3, 0, BaseBNumeral(2, {k})}) == power_column(2, 3, 0, k));

    CHECK(eval_recursive({2, 3, 0, BigInt(100000)}) ==
          eval_bruteforce({2, 3, 0, BigInt(100000)}));
}

TEST_CASE("three-way agreement across random queries") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 250; ++t) {
        const unsigned b = 2 + static_cast<unsigned>(rng() % 9);
        const unsigned q = 2 + static_cast<unsigned>(rng() % 29);
        const unsigned digits = 1 + static_cast<unsigned>(rng() % 14);
        const BigInt counter = 1 + BigInt(static_cast<unsigned long>(rng() % ((1ull << digits) - 1)));
        const BaseBNumeral bound = BaseBNumeral::from_counter(counter, b);
        const unsigned i = static_cast<unsigned>(rng() % q);
        const DiscrepancyQuery query(b, q, i, bound);
        const BigInt r = eval_recursive(query);
        CHECK(r == spectrum(b, q, bound).coeff(i));
        if (bound.digit_count() <= 12) CHECK(r == eval_bruteforce(query));
    }
}

TEST_CASE("column identity: S(b^k + N) = S(b^k) - shifted S(N)") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 150; ++t) {
        const unsigned b = 2 + static_cast<unsigned>(rng() % 7);
        const unsigned q = 2 + static_cast<unsigned>(rng() % 12);
        const unsigned i = static_cast<unsigned>(rng() % q);
        const unsigned k = 2 + static_cast<unsigned>(rng() % 8);
        const BigInt sub = 1 + BigInt(static_cast<unsigned long>(rng() % ((1ull << k) - 1)));
        const BaseBNumeral inner = BaseBNumeral::from_counter(sub, b); // < b^k
        std::vector<unsigned> joint{k};
        for (unsigned e : inner.exponents()) joint.push_back(e);
        const BaseBNumeral outer(b, joint);

        const BigInt lhs = eval_recursive({b, q, i, outer});
        const BigInt shifted_residue = BigInt(i) - big_pow(b, k);
        const BigInt rhs = eval_recursive({b, q, i, BaseBNumeral(b, {k})}) -
                           eval_recursive({b, q, shifted_residue, inner});
        CHECK(lhs == rhs);
    }
}

TEST_CASE("signed sum over all residues cancels for k >= 1") {
    for (unsigned b : {2u, 4u, 7u})
        for (unsigned q : {2u, 3u, 10u})
            for (unsigned k = 1; k <= 14; ++k)
                CHECK(power_column_polynomial(b, q, k).coeff_sum() == 0);
}

TEST_CASE("coefficient mass is bounded by 2^k") {
    for (unsigned b : {2u, 4u, 5u}) {
        for (unsigned q : {3u, 7u, 12u}) {
            for (unsigned k = 0; k <= 24; ++k) {
                const BigInt mass = power_column_polynomial(b, q, k).coeff_mass();
                CHECK(mass <= (BigInt(1) << k));
            }
        }
    }
    // no cancellation when every factor exponent is 0 mod q: mass == 2^k
    CHECK(power_column_polynomial(3, 2, 6).coeff_mass() == 64);
}

TEST_CASE("odd base parity shortcut") {
    // For odd b and even q, membership in class i forces the sign (-1)^i,
    // so S is (-1)^i times a plain count. Exhaustive for b=3, q=4 up to 3^10.
    const unsigned b = 3, q = 4;
    std::vector<long> count(q, 0);
    enumerate_ab(b, big_pow(3, 10), [&](const BaseBNumeral& m) {
        count[m.value_mod(q)] += 1;
        return true;
    });
    ColumnTable table(b, q, 10);
    for (unsigned i = 0; i < q; ++i) {
        const BigInt s = eval_recursive({b, q, i, BaseBNumeral(b, {10u})}, &table);
        const long sign = (i % 2 == 0) ? 1 : -1;
        CHECK(s == sign * count[i]);
    }
}

TEST_CASE("dispatcher and guards") {
    const DiscrepancyQuery query(2, 3, 1, BigInt(4));
    CHECK(eval(query, EvalMethod::automatic) == -1);
    CHECK(eval(query, EvalMethod::brute) == eval(query, EvalMethod::recursive));
    CHECK(eval(query, EvalMethod::character) == -1);

    // negative residues are reduced
    CHECK(eval({2, 3, BigInt(-2), BigInt(4)}, EvalMethod::brute) == -1);

    // large bound finishes through the character path and stays consistent
    const DiscrepancyQuery big(6, 7, 0, BaseBNumeral(6, {100u}));
    const BigInt s = eval(big, EvalMethod::character);
    CHECK(s == eval(big, EvalMethod::recursive));
    CHECK(s > 0);
    const std::size_t nd = decimal_digits(s);
    CHECK(nd >= 25);
    CHECK(nd <= 31);

    CHECK_THROWS_AS(eval_bruteforce({2, 3, 0, BaseBNumeral(2, {30u})}), resource_error);
    CHECK_THROWS_AS(parse_method("fancy"), domain_error);

    // the shared-table path matches the standalone one
    ColumnTable table(5, 9, 12);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
        const BigInt c = 1 + BigInt(static_cast<unsigned long>(rng() % 4095));
        const BaseBNumeral bound = BaseBNumeral::from_counter(c, 5);
        const unsigned i = static_cast<unsigned>(rng() % 9);
        const DiscrepancyQuery query(5, 9, i, bound);
        CHECK(eval_recursive(query, &table) == eval_recursive(query));
        CHECK(spectrum(5, 9, bound, &table) == spectrum(5, 9, bound));
    }
}
