#pragma once

#include "newman/bigint.hpp"

namespace newman {

// Floating-point prediction layer for S_{q,i}(b^k) when b = 2l is even,
// (b+1) | q and gcd(b, q) = 1. The main term grows like beta^k with
// beta = 2 sin(pi l/(2l+1)); the residual is governed by gamma, the largest
// cycle-product modulus over the non-extremal character classes.

struct AsymptoticProfile {
    unsigned b = 0;       // even base, b = 2l
    unsigned l = 0;
    unsigned q = 0;       // multiple of b+1, coprime to b
    unsigned s = 0;       // multiplicative order of b mod q
    double beta = 0.0;    // 2 sin(pi l/(2l+1)), in (sqrt(3), 2)
    double gamma = 0.0;   // error base, < beta^s
    double fitted_m = 0.0;
    bool exact = false;   // true when gamma = 0 and the main term is exact
};

/// Validates the (b, q) hypotheses and computes l, s, beta, gamma.
AsymptoticProfile make_profile(unsigned b, unsigned q);

/// 2 sin(pi l/(2l+1)). Increases from sqrt(3) at l=1 toward 2.
double beta(unsigned l);

/// Largest |prod_{p<s}(1 - zeta_q^{b^p m})| over m not congruent to the two
/// extremal classes +-(q/(2l+1)) l mod q. Zero when only m = 0 survives.
double gamma(unsigned b, unsigned q);

/// The two extremal classes themselves attain beta^s exactly; exposed for tests.
double extremal_cycle_product(unsigned b, unsigned q);

/// Parity-split prediction for S_{q,i}(b^k):
///   k even: (2/q) cos(2*pi*i*l/(2l+1)) beta^k
///   k odd:  (2/q) (cos(2*pi*i*l/(2l+1)) - cos(2*pi*(i-1)*l/(2l+1))) beta^(k-1)
double main_term(unsigned b, unsigned q, unsigned i, unsigned k);

/// |exact S(b^k) - main term| / gamma^(k/s), the normalized residual the
/// envelope constant is fitted on. Computed in extended precision: at k ~ 80
/// the subtraction loses ~70 bits to cancellation, far beyond double.
/// Requires gamma > 0 (use fit_envelope for the exact q = 3 case).
double residual_ratio(unsigned b, unsigned q, unsigned i, unsigned k);

/// fitted M = max over k in [1, k_max] and all i of residual_ratio.
/// For the gamma = 0 profile (b=2, q=3) the main term must be exactly the
/// integer value; any mismatch throws property_violation and otherwise M = 0.
/// Requires k_max >= 4s.
AsymptoticProfile fit_envelope(unsigned b, unsigned q, unsigned k_max);

struct TrigSweepReport {
    unsigned l = 0;
    unsigned grid = 0;
    double bound = 0.0;           // 4 sin^2(pi l/(2l+1))
    double max_interior = 0.0;    // largest sampled f
    double min_margin = 0.0;      // smallest bound - f over the sweep
    unsigned bound_violations = 0;     // f >= bound - 1e-9
    unsigned derivative_sign_violations = 0;
    bool pass() const { return bound_violations == 0 && derivative_sign_violations == 0; }
};

/// Samples f(theta) = |1-z||1-z^b| on the open arc where |1-z| exceeds
/// 2 sin(pi l/(2l+1)) (endpoints excluded by half a grid step) and checks
/// f < bound with margin 1e-9, plus the V-shape of f: decreasing left of pi,
/// increasing right of it. Requires grid >= 1000.
TrigSweepReport check_trig_lemma(unsigned l, unsigned grid);

struct EnvelopeBounds {
    double lower = 0.0;
    double upper = 0.0;
};

/// Two-sided envelope for S_{q,i}(b^k) given a fitted M, selected by the class
/// of i mod (b+1): 0 gets the beta^(k+1)/q lower bound, +-1 get negative main
/// terms (upper bounds, and <= M gamma^(k/s) once l >= 2), 0 and +-2 get the
/// -M gamma^(k/s) floor for l >= 2, and every class gets the generic
/// (2/q) beta^k + M gamma^(k/s) two-sided bound. Requires k >= 1.
EnvelopeBounds envelope_bounds(unsigned b, unsigned q, unsigned i, unsigned k, double fitted_m);

} // namespace newman
