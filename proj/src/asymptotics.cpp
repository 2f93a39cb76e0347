#include "newman/asymptotics.hpp"

#include "newman/discrepancy.hpp"
#include "newman/errors.hpp"
#include "newman/modmath.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

namespace newman {

namespace {

using Float = boost::multiprecision::cpp_bin_float_50;

const Float& hp_pi() {
    static const Float pi = 4 * atan(Float(1));
    return pi;
}

void require_profile_args(unsigned b, unsigned q) {
    if (b < 2 || b % 2 != 0) throw domain_error("profile requires an even base >= 2");
    if (q % (b + 1) != 0) throw domain_error("profile requires (b+1) | q");
    if (std::gcd(b, q) != 1) throw domain_error("profile requires gcd(b, q) = 1");
}

// |prod_{p<s}(1 - zeta_q^{b^p m})| for one class m.
double cycle_product_modulus(unsigned b, unsigned q, unsigned s, unsigned m) {
    std::complex<double> prod(1.0, 0.0);
    std::uint64_t e = m % q;
    for (unsigned p = 0; p < s; ++p) {
        const double ang = 2.0 * std::numbers::pi * static_cast<double>(e) / q;
        prod *= std::complex<double>(1.0 - std::cos(ang), -std::sin(ang));
        e = mul_mod(e, b, q);
    }
    return std::abs(prod);
}

// The two classes where every factor modulus equals beta: +-(q/(2l+1)) * l.
std::pair<unsigned, unsigned> extremal_classes(unsigned b, unsigned q) {
    const unsigned l = b / 2;
    const unsigned e = static_cast<unsigned>((static_cast<std::uint64_t>(q / (2 * l + 1)) * l) % q);
    return {e, (q - e) % q};
}

// Exact integer main term for the one profile with gamma = 0 (b=2, q=3,
// the only valid pair with q <= 3). Valid for k >= 1.
BigInt exact_main_q3(unsigned i, unsigned k) {
    if (k % 2 == 0) {
        const BigInt p = big_pow(3, k / 2 - 1);
        return i == 0 ? 2 * p : -p;
    }
    const BigInt p = big_pow(3, (k - 1) / 2);
    if (i == 0) return p;
    if (i == 1) return -p;
    return 0;
}

Float hp_main_term(unsigned b, unsigned q, unsigned i, unsigned k) {
    const unsigned l = b / 2;
    const Float ang = 2 * hp_pi() * l / (2 * l + 1);
    const Float hbeta = 2 * sin(hp_pi() * l / (2 * l + 1));
    if (k % 2 == 0)
        return 2 * cos(ang * i) / q * pow(hbeta, static_cast<int>(k));
    return 2 * (cos(ang * i) - cos(ang * (static_cast<int>(i) - 1))) / q *
           pow(hbeta, static_cast<int>(k) - 1);
}

Float hp_gamma(unsigned b, unsigned q, unsigned s) {
    const auto [e1, e2] = extremal_classes(b, q);
    Float best = 0;
    for (unsigned m = 0; m < q; ++m) {
        if (m == e1 || m == e2) continue;
        Float re = 1, im = 0;
        std::uint64_t e = m;
        for (unsigned p = 0; p < s; ++p) {
            const Float ang = 2 * hp_pi() * static_cast<int>(e) / q;
            const Float fr = 1 - cos(ang), fi = -sin(ang);
            const Float nr = re * fr - im * fi;
            im = re * fi + im * fr;
            re = nr;
            e = mul_mod(e, b, q);
        }
        const Float mod = sqrt(re * re + im * im);
        if (mod > best) best = mod;
    }
    return best;
}

Float hp_residual_ratio(unsigned b, unsigned q, unsigned s, unsigned i, unsigned k,
                        const ColumnTable* table) {
    const BigInt exact = table ? table->entry(k, i) : power_column(b, q, i, k);
    const Float ex(exact.get_str());
    const Float diff = abs(ex - hp_main_term(b, q, i, k));
    const Float g = hp_gamma(b, q, s);
    return diff / pow(g, Float(k) / s);
}

} // namespace

double beta(unsigned l) {
    if (l < 1) throw domain_error("beta requires l >= 1");
    return 2.0 * std::sin(std::numbers::pi * l / (2.0 * l + 1.0));
}

AsymptoticProfile make_profile(unsigned b, unsigned q) {
    require_profile_args(b, q);
    AsymptoticProfile pr;
    pr.b = b;
    pr.l = b / 2;
    pr.q = q;
    pr.s = multiplicative_order(b, q);
    pr.beta = beta(pr.l);
    pr.gamma = gamma(b, q);
    pr.exact = (pr.gamma == 0.0);
    return pr;
}

double gamma(unsigned b, unsigned q) {
    require_profile_args(b, q);
    const unsigned s = multiplicative_order(b, q);
    const auto [e1, e2] = extremal_classes(b, q);
    double best = 0.0;
    for (unsigned m = 0; m < q; ++m) {
        if (m == e1 || m == e2) continue;
        best = std::max(best, cycle_product_modulus(b, q, s, m));
    }
    return best;
}

double extremal_cycle_product(unsigned b, unsigned q) {
    require_profile_args(b, q);
    const unsigned s = multiplicative_order(b, q);
    return cycle_product_modulus(b, q, s, extremal_classes(b, q).first);
}

double main_term(unsigned b, unsigned q, unsigned i, unsigned k) {
    require_profile_args(b, q);
    return static_cast<double>(hp_main_term(b, q, i % q, k));
}

double residual_ratio(unsigned b, unsigned q, unsigned i, unsigned k) {
    require_profile_args(b, q);
    const unsigned s = multiplicative_order(b, q);
    if (q == 3) throw domain_error("residual_ratio: gamma = 0, ratio undefined (use fit_envelope)");
    return static_cast<double>(hp_residual_ratio(b, q, s, i % q, k, nullptr));
}

AsymptoticProfile fit_envelope(unsigned b, unsigned q, unsigned k_max) {
    AsymptoticProfile pr = make_profile(b, q);
    if (k_max < 4 * pr.s) throw domain_error("fit_envelope requires k_max >= 4s");

    const ColumnTable table(b, q, k_max);
    if (pr.exact) {
        // gamma = 0 only happens for (2, 3); the prediction must then be the
        // exact integer, and 0/0 is read as 0.
        for (unsigned k = 1; k <= k_max; ++k)
            for (unsigned i = 0; i < q; ++i)
                if (table.entry(k, i) != exact_main_q3(i, k))
                    throw property_violation("exact-formula violation at q=3, k=" + std::to_string(k));
        pr.fitted_m = 0.0;
        return pr;
    }
    Float worst = 0;
    for (unsigned k = 1; k <= k_max; ++k)
        for (unsigned i = 0; i < q; ++i)
            worst = std::max(worst, hp_residual_ratio(b, q, pr.s, i, k, &table));
    pr.fitted_m = static_cast<double>(worst);
    return pr;
}

TrigSweepReport check_trig_lemma(unsigned l, unsigned grid) {
    if (l < 1) throw domain_error("check_trig_lemma requires l >= 1");
    if (grid < 1000) throw domain_error("check_trig_lemma requires grid >= 1000");

    TrigSweepReport rep;
    rep.l = l;
    rep.grid = grid;
    const double pi = std::numbers::pi;
    const double sin_l = std::sin(pi * l / (2.0 * l + 1.0));
    rep.bound = 4.0 * sin_l * sin_l;
    rep.min_margin = rep.bound;

    const double left = 2.0 * pi * l / (2.0 * l + 1.0);
    const double width = 2.0 * pi / (2.0 * l + 1.0);
    const double step = width / grid;
    for (unsigned j = 0; j < grid; ++j) {
        const double theta = left + (j + 0.5) * step;
        const double sl = std::sin(l * theta);
        const double sh = std::sin(theta / 2.0);
        const double f = 4.0 * std::abs(sl * sh);
        rep.max_interior = std::max(rep.max_interior, f);
        rep.min_margin = std::min(rep.min_margin, rep.bound - f);
        if (f >= rep.bound - 1e-9) ++rep.bound_violations;

        // slope of |4 sin(l theta) sin(theta/2)|: negative approaching the
        // central zero at pi, positive after it
        const double delta = (sl * sh >= 0.0) ? 1.0 : -1.0;
        const double fp = 4.0 * delta *
                          (l * std::cos(l * theta) * sh + 0.5 * sl * std::cos(theta / 2.0));
        if (theta < pi ? fp >= 0.0 : fp <= 0.0) ++rep.derivative_sign_violations;
    }
    return rep;
}

EnvelopeBounds envelope_bounds(unsigned b, unsigned q, unsigned i, unsigned k, double fitted_m) {
    require_profile_args(b, q);
    if (k < 1) throw domain_error("envelope_bounds requires k >= 1");
    const unsigned l = b / 2;
    const unsigned s = multiplicative_order(b, q);
    const double bet = beta(l);
    const double g = gamma(b, q);
    const double err = fitted_m * (g == 0.0 ? 0.0 : std::pow(g, static_cast<double>(k) / s));
    const double pi = std::numbers::pi;
    const double cos1 = std::cos(2.0 * pi * l / (2.0 * l + 1.0));
    const double cos2 = std::cos(4.0 * pi * l / (2.0 * l + 1.0));

    EnvelopeBounds bd;
    const double generic = 2.0 / q * std::pow(bet, k) + err;
    bd.lower = -generic;
    bd.upper = generic;

    const unsigned c = i % (b + 1);
    if (c == 0) {
        bd.lower = std::max(bd.lower, std::pow(bet, k + 1) / q - err);
        if (l >= 2) bd.lower = std::max(bd.lower, -err);
    } else if (c == 1) {
        bd.upper = std::min(bd.upper, 2.0 / q * cos1 * std::pow(bet, k) + err);
        if (l >= 2) bd.upper = std::min(bd.upper, err);
    } else if (c == b) {
        bd.upper = std::min(bd.upper, 2.0 / q * (cos1 - cos2) * std::pow(bet, k - 1) + err);
        if (l >= 2) bd.upper = std::min(bd.upper, err);
    } else if (l >= 2 && (c == 2 || c == b - 1)) {
        bd.lower = std::max(bd.lower, -err);
    }
    return bd;
}

} // namespace newman
