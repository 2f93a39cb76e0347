#include "newman/discrepancy.hpp"

#include "newman/errors.hpp"
#include "newman/modmath.hpp"

#include <cassert>
#include <numeric>

namespace newman {

namespace {

void require_modulus(unsigned q) {
    if (q < 1) throw domain_error("modulus must be >= 1");
}

} // namespace

// ---------------------------------------------------------------- residues

ResidueClass::ResidueClass(const BigInt& value, unsigned modulus) : modulus_(modulus) {
    require_modulus(modulus);
    BigInt r = value % modulus;
    if (r < 0) r += modulus;
    value_ = static_cast<unsigned>(r.get_ui());
}

// ------------------------------------------------------- cyclic polynomials

CyclicPolynomial::CyclicPolynomial(unsigned modulus) : modulus_(modulus), coeffs_(modulus) {
    require_modulus(modulus);
}

CyclicPolynomial CyclicPolynomial::one(unsigned modulus) {
    CyclicPolynomial p(modulus);
    p.coeffs_[0] = 1;
    return p;
}

BigInt CyclicPolynomial::coeff_mass() const {
    BigInt m = 0;
    for (const BigInt& c : coeffs_) m += abs(c);
    return m;
}

BigInt CyclicPolynomial::coeff_sum() const {
    BigInt s = 0;
    for (const BigInt& c : coeffs_) s += c;
    return s;
}

void CyclicPolynomial::mul_one_minus_power(unsigned c) {
    c %= modulus_;
    // out[j] = coeffs[j] - coeffs[(j - c) mod q]
    std::vector<BigInt> out(modulus_);
    for (unsigned j = 0; j < modulus_; ++j) {
        out[j] = coeffs_[j];
        out[j] -= coeffs_[(j + modulus_ - c) % modulus_];
    }
    coeffs_ = std::move(out);
}

void CyclicPolynomial::add_shifted(const CyclicPolynomial& other, unsigned shift, int sign) {
    assert(other.modulus_ == modulus_);
    shift %= modulus_;
    for (unsigned j = 0; j < modulus_; ++j) {
        BigInt& dst = coeffs_[(j + shift) % modulus_];
        if (sign >= 0) dst += other.coeffs_[j];
        else dst -= other.coeffs_[j];
    }
}

CyclicPolynomial CyclicPolynomial::operator*(const CyclicPolynomial& other) const {
    assert(other.modulus_ == modulus_);
    CyclicPolynomial out(modulus_);
    for (unsigned i = 0; i < modulus_; ++i) {
        if (coeffs_[i] == 0) continue;
        for (unsigned j = 0; j < modulus_; ++j) {
            if (other.coeffs_[j] == 0) continue;
            BigInt& dst = out.coeffs_[(i + j) % modulus_];
            mpz_addmul(dst.get_mpz_t(), coeffs_[i].get_mpz_t(), other.coeffs_[j].get_mpz_t());
        }
    }
    return out;
}

// --------------------------------------------------------------- columns

ColumnTable::ColumnTable(unsigned base, unsigned modulus, unsigned k_max)
    : base_(base), modulus_(modulus) {
    if (base < 2) throw domain_error("base must be >= 2");
    require_modulus(modulus);
    cols_.reserve(k_max + 1);
    CyclicPolynomial cur = CyclicPolynomial::one(modulus);
    cols_.push_back(cur);
    std::uint64_t factor = 1 % modulus;
    for (unsigned k = 1; k <= k_max; ++k) {
        cur.mul_one_minus_power(static_cast<unsigned>(factor));
        cols_.push_back(cur);
        factor = mul_mod(factor, base, modulus);
    }
}

CyclicPolynomial power_column_polynomial(unsigned base, unsigned modulus, unsigned k) {
    if (base < 2) throw domain_error("base must be >= 2");
    require_modulus(modulus);
    const unsigned q = modulus;
    CyclicPolynomial acc = CyclicPolynomial::one(q);
    if (k == 0) return acc;

    if (std::gcd<std::uint64_t>(base, q) == 1) {
        const unsigned s = multiplicative_order(base, q);
        const unsigned full_cycles = k / s;
        const unsigned rem = k % s;
        if (full_cycles > 0) {
            CyclicPolynomial cycle = CyclicPolynomial::one(q);
            std::uint64_t f = 1 % q;
            for (unsigned p = 0; p < s; ++p) {
                cycle.mul_one_minus_power(static_cast<unsigned>(f));
                f = mul_mod(f, base, q);
            }
            // acc = cycle^full_cycles by binary exponentiation
            unsigned e = full_cycles;
            CyclicPolynomial sq = cycle;
            bool acc_set = false;
            while (e) {
                if (e & 1) {
                    acc = acc_set ? acc * sq : sq;
                    acc_set = true;
                }
                e >>= 1;
                if (e) sq = sq * sq;
            }
            if (!acc_set) acc = CyclicPolynomial::one(q);
        }
        std::uint64_t f = 1 % q;
        for (unsigned p = 0; p < rem; ++p) {
            acc.mul_one_minus_power(static_cast<unsigned>(f));
            f = mul_mod(f, base, q);
        }
        return acc;
    }

    // gcd(b, q) > 1: the factor exponents b^p mod q are only eventually
    // periodic; apply them one by one (each is an O(q) shift-subtract).
    std::uint64_t f = 1 % q;
    for (unsigned p = 0; p < k; ++p) {
        acc.mul_one_minus_power(static_cast<unsigned>(f));
        f = mul_mod(f, base, q);
    }
    return acc;
}

BigInt power_column(unsigned base, unsigned modulus, unsigned residue, unsigned k) {
    if (residue >= modulus) throw domain_error("residue out of range");
    return power_column_polynomial(base, modulus, k).coeff(residue);
}

// ---------------------------------------------------------------- queries

DiscrepancyQuery::DiscrepancyQuery(unsigned base, unsigned modulus, const BigInt& residue,
                                   const BigInt& bound)
    : residue_(residue, modulus), bound_(ceiling_in_ab(bound, base)) {}

DiscrepancyQuery::DiscrepancyQuery(unsigned base, unsigned modulus, const BigInt& residue,
                                   BaseBNumeral bound)
    : residue_(residue, modulus), bound_(std::move(bound)) {
    if (bound_.base() != base) throw domain_error("bound numeral base mismatch");
    if (bound_.is_zero()) throw domain_error("bound must be >= 1");
}

// -------------------------------------------------------------- evaluators

BigInt eval_bruteforce(const DiscrepancyQuery& query) {
    const unsigned q = query.modulus();
    const BigInt cmax = query.bound().binary_compression();
    if (cmax > (BigInt(1) << 24))
        throw resource_error("eval_bruteforce: bound exceeds the 2^24-element oracle guard");

    const unsigned long n_top = query.bound().digit_count();
    std::vector<std::uint64_t> pw(n_top + 1);
    for (unsigned long j = 0; j <= n_top; ++j) pw[j] = pow_mod(query.base(), j, q);

    const std::uint64_t cm = cmax.get_ui();
    const std::uint64_t want = query.residue();
    std::int64_t s = 0;
    for (std::uint64_t c = 0; c < cm; ++c) {
        std::uint64_t r = 0;
        for (std::uint64_t bits = c; bits; bits &= bits - 1) {
            r += pw[static_cast<unsigned>(__builtin_ctzll(bits))];
            if (r >= q) r -= q;
        }
        if (r == want) s += (__builtin_popcountll(c) & 1) ? -1 : 1;
    }
    return BigInt(static_cast<long>(s));
}

namespace {

BigInt column_entry(unsigned base, unsigned q, unsigned i, unsigned k, const ColumnTable* table) {
    if (table != nullptr) {
        assert(table->base() == base && table->modulus() == q);
        return table->entry(k, i);
    }
    return power_column(base, q, i, k);
}

} // namespace

BigInt eval_recursive(const DiscrepancyQuery& query, const ColumnTable* table) {
    const unsigned b = query.base();
    const unsigned q = query.modulus();
    BigInt total = 0;
    std::uint64_t shift = 0; // sum of b^{k_1..k_{j-1}} mod q
    int sign = 1;
    for (unsigned k : query.bound().exponents()) {
        const unsigned i = static_cast<unsigned>((query.residue() + q - shift % q) % q);
        if (sign > 0) total += column_entry(b, q, i, k, table);
        else total -= column_entry(b, q, i, k, table);
        shift = (shift + pow_mod(b, k, q)) % q;
        sign = -sign;
    }
    return total;
}

CyclicPolynomial spectrum(unsigned base, unsigned modulus, const BaseBNumeral& bound,
                          const ColumnTable* table) {
    require_modulus(modulus);
    CyclicPolynomial out(modulus);
    std::uint64_t shift = 0;
    int sign = 1;
    for (unsigned k : bound.exponents()) {
        if (table != nullptr) {
            out.add_shifted(table->column(k), static_cast<unsigned>(shift), sign);
        } else {
            out.add_shifted(power_column_polynomial(base, modulus, k),
                            static_cast<unsigned>(shift), sign);
        }
        shift = (shift + pow_mod(base, k, modulus)) % modulus;
        sign = -sign;
    }
    return out;
}

BigInt eval(const DiscrepancyQuery& query, EvalMethod method) {
    switch (method) {
    case EvalMethod::brute:
        return eval_bruteforce(query);
    case EvalMethod::character:
        return spectrum(query.base(), query.modulus(), query.bound()).coeff(query.residue());
    case EvalMethod::recursive:
    case EvalMethod::automatic:
        return eval_recursive(query);
    }
    throw domain_error("unknown evaluation method");
}

EvalMethod parse_method(const std::string& name) {
    if (name == "auto") return EvalMethod::automatic;
    if (name == "brute") return EvalMethod::brute;
    if (name == "recursive") return EvalMethod::recursive;
    if (name == "character") return EvalMethod::character;
    throw domain_error("unknown method '" + name + "' (want auto|brute|recursive|character)");
}

} // namespace newman
