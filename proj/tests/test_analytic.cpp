//
// Closed-form engine.  Reference values were computed independently with
// 40-digit arithmetic; the spatial exponent is additionally checked against
// direct adaptive quadrature, and the derivative tower against Richardson
// finite differences.
//
#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "pbcov/analytic.hpp"

using namespace pbcov;
using oracle::kPi;

namespace {

// The closed-form spatial exponent reassembled from the public helper
// terms, at gain 1 so that the scalar argument w equals s * p_p.
Complex t_closed(Complex w, const NetworkParams& p) {
    const Complex s = w / p.p_p;
    const double mm = static_cast<double>(p.m);
    const Complex t1 =
        (std::pow(mm, mm) * std::pow(w * std::pow(p.r_min, -p.alpha_L) + mm, -mm) - 1.0) *
        (p.r_min * p.r_min);
    const Complex t2 = std::pow(w, p.delta_L()) *
                       (xi1(p.r_near, s, 1.0, p) - xi1(p.r_min, s, 1.0, p));
    const Complex t3 =
        w * p.beta() * (xi2(p.r_min, s, 1.0, p) - xi2(p.r_max, s, 1.0, p));
    const Complex t4 = std::pow(w * p.beta(), p.delta_N()) / (2.0 + p.alpha_N) *
                       (xi3(p.r_min, s, 1.0, p) - xi3(p.r_max, s, 1.0, p));
    return kPi * (t1 + t2 + t3 + t4);
}

double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

// Power coverage at the 11 ladder threshold grid edges, Table-style
// defaults, frozen from the independent evaluation.
const std::vector<double> kEdgeCov = {
    0.941579144960, 0.866555690198, 0.749148614746, 0.632801978070,
    0.522706883315, 0.402366033709, 0.272014854015, 0.182227053449,
    0.106864545908, 0.064847583116, 0.039684359339};

} // namespace

TEST_CASE("harvested-power transform identities") {
    const NetworkParams p;
    CHECK(laplace_ppt(Complex(0.0, 0.0), p) == Complex(1.0, 0.0));

    NetworkParams empty = p;
    empty.lambda_p = 0.0;
    CHECK(laplace_ppt(Complex(3.0, 0.0), empty) == Complex(1.0, 0.0));

    // Real transform of a nonnegative variable: real, in (0, 1], decreasing.
    double prev = 1.0;
    for (double s : {1e-2, 1.0, 1e2, 1e4, 1e6}) {
        const Complex v = laplace_ppt(Complex(s, 0.0), p);
        CHECK(std::fabs(v.imag()) < 1e-14);
        CHECK(v.real() > 0.0);
        CHECK(v.real() < prev);
        prev = v.real();
    }

    // |L(s)| <= 1 anywhere in the right half-plane.
    for (const Complex s : {Complex(0.1, 5.0), Complex(1e-4, 3e3), Complex(1.2e6, -3e5)})
        CHECK(std::abs(laplace_ppt(s, p)) <= 1.0 + 1e-12);
}

TEST_CASE("spatial exponent matches adaptive quadrature") {
    const NetworkParams p;
    const Complex shapes[] = {{1e-3, 0.0},   {1.0, 0.0},      {250.0, 0.0},
                              {4e6, 0.0},    {60.0, 600.0},   {1.2e6, -3e5}};
    for (const Complex w : shapes) {
        const Complex closed = t_closed(w, p);
        const Complex quad = oracle::t_quad(w, p, 1e-10 * std::max(1.0, std::abs(closed)));
        CAPTURE(w.real());
        CAPTURE(w.imag());
        CHECK(rel(closed, quad) < 1e-8);
    }
}

TEST_CASE("spatial exponent reference values") {
    const NetworkParams p;
    CHECK(rel(t_closed({250.0, 0.0}, p), {-3747.77605346510983, 0.0}) < 1e-12);
    CHECK(rel(t_closed({60.0, 600.0}, p), {-3474.62763184192805, -7050.65978030175573}) <
          1e-12);
}

TEST_CASE("harvested-power transform equals the quadrature product") {
    const NetworkParams p;
    const GainDistribution d = gain_pmf(p.pb_pattern, p.tx_pattern);
    for (const Complex s : {Complex(2e-4, 0.0), Complex(6e-4, 1.5e-3)}) {
        Complex expo = 0.0;
        for (const auto& e : d.entries)
            expo += p.lambda_p * e.prob * oracle::t_quad(s * (p.p_p * e.gain), p, 1e-12);
        const Complex direct = laplace_ppt(s, p);
        CHECK(std::abs(direct - std::exp(expo)) < 1e-8 * std::abs(direct));
    }
}

TEST_CASE("power coverage at the threshold grid") {
    const NetworkParams p;
    const InversionParams inv;
    for (std::size_t n = 0; n < kEdgeCov.size(); ++n) {
        const double gamma = 1e-5 * std::pow(10.0, static_cast<double>(n) * 0.430102999566398);
        const double got = power_coverage(gamma, p, inv);
        CAPTURE(n);
        CHECK(std::fabs(got - kEdgeCov[n]) < 2e-9);
        if (n > 0) CHECK(got < power_coverage(1e-5 * std::pow(10.0, (n - 1) * 0.430102999566398), p, inv));
    }
}

TEST_CASE("power coverage across activation thresholds in dBm") {
    const NetworkParams p;
    const InversionParams inv;
    const double dbm[] = {-30.0, -25.0, -20.0, -15.0, -10.0};
    const double want[] = {0.992523, 0.978786, 0.941579, 0.849093, 0.710541};
    for (int i = 0; i < 5; ++i) {
        const double got = power_coverage(dbm_to_watts(dbm[i]), p, inv);
        CHECK(std::fabs(got - want[i]) < 2e-6);
    }
}

TEST_CASE("power coverage is insensitive to the inversion controls") {
    const NetworkParams p;
    const InversionParams base;
    InversionParams finer;
    finer.a_ctrl = 28.0;
    finer.b_ctrl = 24;
    finer.c_ctrl = 40;
    const double a = power_coverage(p.gamma_pt, p, base);
    const double b = power_coverage(p.gamma_pt, p, finer);
    CHECK(std::fabs(a - b) < 1e-8);
}

TEST_CASE("large-power limit of the power coverage") {
    const NetworkParams p;
    const double want = 1.0 - std::exp(-kPi * p.lambda_p * p.r_max * p.r_max);
    CHECK(asymptotic_power_coverage(p) == doctest::Approx(want).epsilon(1e-15));
    CHECK(std::fabs(asymptotic_power_coverage(p) - 0.998132557268292) < 1e-12);
}

TEST_CASE("transmit-power ladder construction") {
    const NetworkParams p;
    const InversionParams inv;
    const PowerLevels lv = power_levels(p, inv);
    REQUIRE(lv.n_levels == 10);
    REQUIRE(lv.k.size() == 11);
    REQUIRE(lv.p_t.size() == 11);
    REQUIRE(lv.lambda_t_n.size() == 11);

    // Grid spacing: cap is min(p_max1/eta, (1-rho)/(eta rho) p_max2) = 0.2 W,
    // so the dB span is 10 log10(0.2 / 1e-5) split into N steps.
    CHECK(lv.step_db == doctest::Approx(4.30102999566398).epsilon(1e-12));

    // The level masses telescope: bin n is the difference of consecutive
    // grid-edge tail probabilities, the top bin the tail at the cap.
    for (std::size_t n = 0; n + 1 < kEdgeCov.size(); ++n)
        CHECK(std::fabs(lv.k[n] - (kEdgeCov[n] - kEdgeCov[n + 1])) < 3e-9);
    CHECK(std::fabs(lv.k.back() - kEdgeCov.back()) < 2e-9);

    // Total mass is the activation probability.
    CHECK(std::fabs(lv.coverage_mass() - power_coverage(p.gamma_pt, p, inv)) < 1e-9);

    // Transmit powers map the lower bin edges through the slot arithmetic.
    for (std::size_t n = 0; n < lv.p_t.size(); ++n) {
        const double edge = 1e-5 * std::pow(10.0, static_cast<double>(n) * lv.step_db / 10.0);
        CHECK(lv.p_t[n] == doctest::Approx(0.5 * edge).epsilon(1e-12));
    }
    CHECK(lv.p_t.back() == doctest::Approx(0.1).epsilon(1e-13));

    // Thinned densities.
    for (std::size_t n = 0; n < lv.k.size(); ++n)
        CHECK(lv.lambda_t_n[n] == lv.k[n] * p.lambda_t);
}

TEST_CASE("ladder rejects a cap at or below the activation threshold") {
    NetworkParams p;
    p.gamma_pt = 0.5; // above the 0.2 W harvest cap
    const InversionParams inv;
    CHECK_THROWS_AS((void)power_levels(p, inv), numerical_error);
}

TEST_CASE("interference log-transform derivatives at a ladder rung") {
    const NetworkParams p;
    const InversionParams inv;
    const PowerLevels lv = power_levels(p, inv);
    // Evaluation point: the Nakagami expansion abscissa of rung 5 at unit
    // SINR threshold, s = m / (p_t[5] * G0 * l(d0)).
    const double d0_gain = p.tx_pattern.g_max * p.rx_pattern.g_max;
    const double l_d0 = std::pow(p.d0, -p.alpha_L);
    const double s0 = p.m * 1.0 / (lv.p_t[5] * d0_gain * l_d0);
    CHECK(s0 == doctest::Approx(28284.271247461901).epsilon(1e-12));

    const DerivativeStack g = log_laplace_in_derivatives(s0, 4, p, lv);
    REQUIRE(g.order() == 4);
    // Scaled derivatives g^(j)/j! frozen from the independent evaluation.
    const double coeff[] = {-0.100923000248613652, -2.47130641158279971e-6,
                            1.26719199989728016e-11, -2.05674314141768796e-16,
                            4.28313603347846291e-21};
    // The value itself accumulates ~1e-11 relative error across the 44
    // hypergeometric terms of the ladder sum; higher orders lose a little
    // more to the same accumulation.
    const double tol[] = {1e-10, 1e-10, 1e-9, 1e-8, 1e-7};
    double fact = 1.0;
    for (int j = 0; j <= 4; ++j) {
        if (j > 0) fact *= j;
        CHECK(std::fabs(g.values[j].imag()) == 0.0);
        CHECK(rel(g.values[j], Complex(coeff[j] * fact, 0.0)) < tol[j]);
    }

    // Exponentiated tower from the same point.
    const DerivativeStack h = specfun::assemble_exp_derivatives(g);
    const double ecoeff[] = {0.90400263818442716, -2.23406751583294072e-6,
                             1.42159817978268183e-11, -2.1651408813419551e-16,
                             4.44042405759179004e-21};
    fact = 1.0;
    for (int j = 0; j <= 4; ++j) {
        if (j > 0) fact *= j;
        CHECK(rel(h.values[j], Complex(ecoeff[j] * fact, 0.0)) < tol[j]);
    }
}

TEST_CASE("interference log-transform derivatives match finite differences") {
    const NetworkParams p;
    const InversionParams inv;
    const PowerLevels lv = power_levels(p, inv);
    const double s0 = 28284.271247461901;
    const DerivativeStack g = log_laplace_in_derivatives(s0, 4, p, lv);
    auto g0 = [&](long double s) -> long double {
        return log_laplace_in_derivatives(static_cast<double>(s), 0, p, lv)
            .values[0]
            .real();
    };
    // Step and level choice: wide initial step with deep extrapolation keeps
    // the difference quotients clear of the ~1e-11 evaluation roughness that
    // otherwise dominates the third and fourth orders.
    for (int l = 1; l <= 4; ++l) {
        const double fd = oracle::richardson_derivative(g0, s0, l, 0.45 * s0, 5);
        CHECK(rel(g.values[l], Complex(fd, 0.0)) < 1e-6);
    }
}

TEST_CASE("interference transform identities") {
    const NetworkParams p;
    const InversionParams inv;
    const PowerLevels lv = power_levels(p, inv);
    CHECK(laplace_interference_plus_noise(Complex(0.0, 0.0), p, lv) == Complex(1.0, 0.0));

    NetworkParams noiseless = p;
    noiseless.sigma2 = 0.0;
    CHECK(laplace_interference_plus_noise(Complex(0.0, 0.0), noiseless, lv) ==
          Complex(1.0, 0.0));

    // Consistency with the derivative tower at order zero.
    for (double s : {3e3, 2.8e4, 5e5}) {
        const Complex via_exp = laplace_interference_plus_noise(Complex(s, 0.0), p, lv);
        const Complex via_g =
            std::exp(log_laplace_in_derivatives(s, 0, p, lv).values[0]);
        CHECK(std::abs(via_exp - via_g) < 1e-12 * std::abs(via_exp));
        CHECK(std::abs(via_exp) <= 1.0);
    }
}

TEST_CASE("channel coverage reference values") {
    const NetworkParams p;
    const InversionParams inv;
    const PowerLevels lv = power_levels(p, inv);
    CHECK(std::fabs(channel_coverage(1.0, p, lv, inv) - 0.896621749920448604) < 1e-9);
    CHECK(std::fabs(channel_coverage(1000.0, p, lv, inv) - 0.13035751293135125) < 1e-9);
    // Monotone in the SINR threshold.
    CHECK(channel_coverage(0.1, p, lv, inv) > channel_coverage(1.0, p, lv, inv));
    CHECK(channel_coverage(1.0, p, lv, inv) > channel_coverage(10.0, p, lv, inv));
}

TEST_CASE("total coverage is the product of its factors") {
    const NetworkParams p;
    const InversionParams inv;
    const CoverageResult r = total_coverage(p.gamma_pt, p.gamma_tr, p, inv);
    CHECK(r.source == ResultSource::analytic);
    CHECK(r.trials == 0);
    CHECK(std::fabs(r.power_cov - 0.94157914495984059) < 1e-9);
    CHECK(std::fabs(r.channel_cov - 0.896621749920448604) < 1e-9);
    CHECK(std::fabs(r.total_cov - 0.844240340642492014) < 1e-9);
    CHECK(r.total_cov == doctest::Approx(r.power_cov * r.channel_cov).epsilon(1e-12));

    const CoverageResult hi = total_coverage(p.gamma_pt, 1000.0, p, inv);
    CHECK(std::fabs(hi.total_cov - 0.122741915564993073) < 1e-9);
}

TEST_CASE("reference link must be line of sight") {
    NetworkParams p;
    p.d0 = 150.0;
    const InversionParams inv;
    const PowerLevels lv = power_levels(p, inv);
    CHECK_THROWS_AS((void)channel_coverage(1.0, p, lv, inv), std::domain_error);
    CHECK_THROWS_AS((void)total_coverage(p.gamma_pt, 1.0, p, inv), std::domain_error);
}

TEST_CASE("no beacons means no coverage") {
    NetworkParams p;
    p.lambda_p = 0.0;
    const InversionParams inv;
    const CoverageResult r = total_coverage(p.gamma_pt, p.gamma_tr, p, inv);
    CHECK(r.power_cov == 0.0);
    CHECK(r.channel_cov == 0.0);
    CHECK(r.total_cov == 0.0);

    const PowerLevels lv = power_levels(p, inv);
    CHECK_THROWS_AS((void)channel_coverage(1.0, p, lv, inv), numerical_error);
}

TEST_CASE("coverage probabilities are invariant under unit rescaling") {
    // Re-expressing lengths in km multiplies every path-loss factor by
    // 1000^alpha_L.  Harvest-side quantities (harvested power, activation
    // threshold, energy cap, and hence transmit powers) see one such factor;
    // powers at the data receiver see a second one, so the noise floor
    // scales by the square.  With thresholds and caps scaled accordingly,
    // all three probabilities must be unchanged.
    const NetworkParams base;
    const InversionParams inv;
    NetworkParams km = base;
    const double len = 1e-3;
    const double pow_scale = std::pow(1.0 / len, base.alpha_L); // 1e6
    km.lambda_p = base.lambda_p / (len * len);
    km.lambda_t = base.lambda_t / (len * len);
    km.d0 = base.d0 * len;
    km.r_near = base.r_near * len;
    km.r_min = base.r_min * len;
    km.r_max = base.r_max * len;
    km.gamma_pt = base.gamma_pt * pow_scale;
    km.sigma2 = base.sigma2 * pow_scale * pow_scale;
    km.p_max1 = base.p_max1 * pow_scale;
    km.p_max2 = base.p_max2 * pow_scale;

    const CoverageResult a = total_coverage(base.gamma_pt, base.gamma_tr, base, inv);
    const CoverageResult b = total_coverage(km.gamma_pt, km.gamma_tr, km, inv);
    CHECK(std::fabs(a.power_cov - b.power_cov) < 1e-9);
    CHECK(std::fabs(a.channel_cov - b.channel_cov) < 1e-9);
    CHECK(std::fabs(a.total_cov - b.total_cov) < 1e-9);
}

TEST_CASE("large-power limit of the total coverage") {
    const NetworkParams p;
    const InversionParams inv;
    const double apc = asymptotic_power_coverage(p);
    const double atc = asymptotic_total_coverage(p, inv);
    CHECK(atc > 0.0);
    CHECK(atc <= apc + 1e-12);
    // At 80 dBm beacon power the exact answer is already within a percent.
    NetworkParams strong = p;
    strong.p_p = dbm_to_watts(80.0);
    const CoverageResult r = total_coverage(strong.gamma_pt, strong.gamma_tr, strong, inv);
    CHECK(std::fabs(r.power_cov - 0.9981276079902993) < 1e-9);
    CHECK(std::fabs(r.total_cov - atc) < 0.02);
}
