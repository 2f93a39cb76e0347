#pragma once

#include "newman/bigint.hpp"
#include "newman/digits.hpp"

#include <string>
#include <vector>

namespace newman {

// S_{q,i}(N) is the signed count over n in A_b with n < N and n = i mod q,
// each n weighted by (-1)^(base-b digit sum). Three independent evaluation
// routes are kept: a guarded brute-force oracle, the telescoped digit
// recursion, and a cyclic-polynomial residue spectrum. All three are exact.

/// Residue class i mod q with i normalized into [0, q).
class ResidueClass {
public:
    ResidueClass(const BigInt& value, unsigned modulus);

    unsigned modulus() const { return modulus_; }
    unsigned value() const { return value_; }

private:
    unsigned modulus_;
    unsigned value_;
};

/// Integer polynomial reduced mod (x^q - 1): exactly q coefficients,
/// index j holding the coefficient of x^j.
class CyclicPolynomial {
public:
    explicit CyclicPolynomial(unsigned modulus); // the zero polynomial

    static CyclicPolynomial one(unsigned modulus);

    unsigned modulus() const { return modulus_; }
    const BigInt& coeff(unsigned j) const { return coeffs_[j]; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    /// Sum of |coefficients|. Multiplying by (1 - x^c) at most doubles it, so a
    /// product of k such factors has mass <= 2^k.
    BigInt coeff_mass() const;

    /// Value at x = 1 (sum of coefficients).
    BigInt coeff_sum() const;

    /// this *= (1 - x^c); O(q) big-integer operations.
    void mul_one_minus_power(unsigned c);

    /// this += sign * x^shift * other.
    void add_shifted(const CyclicPolynomial& other, unsigned shift, int sign);

    /// Full cyclic convolution, O(q^2).
    CyclicPolynomial operator*(const CyclicPolynomial& other) const;

    bool operator==(const CyclicPolynomial& o) const = default;

private:
    unsigned modulus_;
    std::vector<BigInt> coeffs_;
};

/// Table of the column polynomials P_k = prod_{p<k}(1 - x^{b^p mod q}) for
/// k = 0..k_max; coefficient i of P_k is S_{q,i}(b^k). Scans and repeated
/// evaluations share one table instead of re-raising powers.
class ColumnTable {
public:
    ColumnTable(unsigned base, unsigned modulus, unsigned k_max);

    unsigned base() const { return base_; }
    unsigned modulus() const { return modulus_; }
    unsigned k_max() const { return static_cast<unsigned>(cols_.size() - 1); }

    const CyclicPolynomial& column(unsigned k) const { return cols_.at(k); }
    const BigInt& entry(unsigned k, unsigned i) const { return cols_.at(k).coeff(i); }

private:
    unsigned base_;
    unsigned modulus_;
    std::vector<CyclicPolynomial> cols_;
};

/// One evaluation request: (b, q, i, N) with the residue normalized and the
/// bound normalized to its A_b ceiling.
class DiscrepancyQuery {
public:
    DiscrepancyQuery(unsigned base, unsigned modulus, const BigInt& residue, const BigInt& bound);
    DiscrepancyQuery(unsigned base, unsigned modulus, const BigInt& residue, BaseBNumeral bound);

    unsigned base() const { return bound_.base(); }
    unsigned modulus() const { return residue_.modulus(); }
    unsigned residue() const { return residue_.value(); }
    const BaseBNumeral& bound() const { return bound_; }

private:
    ResidueClass residue_;
    BaseBNumeral bound_;
};

enum class EvalMethod { automatic, brute, recursive, character };

/// S_{q,i}(b^k), exactly: coefficient i of prod_{p<k}(1 - x^{b^p mod q})
/// mod (x^q - 1), the roots-of-unity filter carried out on integer polynomials.
/// Coprime (b, q) raises the order-s cycle product by binary exponentiation;
/// otherwise the factors are applied sequentially.
BigInt power_column(unsigned base, unsigned modulus, unsigned residue, unsigned k);

/// The whole column P_k at once (all residues i).
CyclicPolynomial power_column_polynomial(unsigned base, unsigned modulus, unsigned k);

/// Brute-force oracle: enumerates A_b below the bound. Guarded at 2^24 points.
BigInt eval_bruteforce(const DiscrepancyQuery& query);

/// Telescoped digit recursion: S_{q,i}(sum b^{k_j}) as the alternating sum of
/// residue-shifted power columns. An optional shared table avoids recomputing
/// columns across many queries; it must match (base, modulus) and cover the
/// bound's top exponent.
BigInt eval_recursive(const DiscrepancyQuery& query, const ColumnTable* table = nullptr);

/// Residue spectrum: one cyclic polynomial whose coefficient i is S_{q,i}(N)
/// for every i simultaneously (the character-sum route for general bounds).
CyclicPolynomial spectrum(unsigned base, unsigned modulus, const BaseBNumeral& bound,
                          const ColumnTable* table = nullptr);

/// Dispatcher; the result is independent of the method.
BigInt eval(const DiscrepancyQuery& query, EvalMethod method = EvalMethod::automatic);

EvalMethod parse_method(const std::string& name);

} // namespace newman
