#include "pbcov/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pbcov/jet.hpp"

namespace pbcov {

namespace {

using specfun::Jet;

constexpr double kPi = 3.141592653589793238462643383279502884;

// Slack allowed on probabilities before an inversion result is declared
// broken rather than clamped: the Euler-summation floor is ~1e-10, so
// anything past 1e-8 signals a real problem.
constexpr double kUnitSlack = 1.0e-8;

double clamp_unit(double v, const char* what) {
    if (v < 0.0) {
        if (v < -kUnitSlack)
            throw numerical_error(std::string(what) + ": probability underflows 0 by " +
                                  std::to_string(-v));
        return 0.0;
    }
    if (v > 1.0) {
        if (v > 1.0 + kUnitSlack)
            throw numerical_error(std::string(what) + ": probability exceeds 1 by " +
                                  std::to_string(v - 1.0));
        return 1.0;
    }
    return v;
}

// ---------------------------------------------------------------- scalar ops
// The closed-form exponent is evaluated both at complex frequencies (for
// the Bromwich inversion) and through Jet arguments (for the derivative
// stacks); these overloads let one template body serve both.

inline Complex s_pow(const Complex& u, double a) { return std::pow(u, a); }
inline Jet s_pow(const Jet& u, double a) { return specfun::pow(u, a); }

inline Complex s_recip(const Complex& u) { return 1.0 / u; }
inline Jet s_recip(const Jet& u) { return specfun::recip(u); }

inline Complex s_hyp(double a, double b, double c, const Complex& z) {
    return specfun::gauss_2f1(a, b, c, z);
}
inline Jet s_hyp(double a, double b, double c, const Jet& z) {
    return specfun::hyp2f1_jet(a, b, c, z);
}

// ---------------------------------------------------------------- exponent
// Helper terms of the per-gain exponent.  The scalar argument w is the
// combined s * (power * gain) factor the transform is evaluated at.

template <typename S>
S xi1_impl(double r, const S& w, const NetworkParams& p) {
    const double mm = static_cast<double>(p.m);
    const double aL = p.alpha_L;
    const double dL = p.delta_L();
    // 2F1 argument -m r^alpha_L / w; prefactor collects the LOS annulus
    // integral constants.
    S z = s_recip(w) * (-mm * std::pow(r, aL));
    const double gamma_ratio =
        std::exp(specfun::ln_gamma(1.0 + mm) - specfun::ln_gamma(mm));
    S pre = s_pow(w * std::pow(r, -aL), -dL - mm) *
            (std::pow(mm, mm) * aL * gamma_ratio / (2.0 + mm * aL));
    return pre * s_hyp(1.0 + mm, mm + dL, 1.0 + mm + dL, z);
}

template <typename S>
S xi2_impl(double r, const S& w, const NetworkParams& p) {
    return s_recip(w * p.beta() + std::pow(r, p.alpha_N)) * (r * r);
}

template <typename S>
S xi3_impl(double r, const S& w, const NetworkParams& p) {
    const double aN = p.alpha_N;
    const double dN = p.delta_N();
    const double raN = std::pow(r, aN);
    S K = w * p.beta();
    S z = s_recip(K) * (-raN);
    S pre = s_pow(K * std::pow(r, -aN), -dN - 1.0) * s_recip(K + raN);
    S inner = K * (2.0 + aN) - (K + raN) * s_hyp(1.0, dN + 1.0, 2.0 + dN, z) * 2.0;
    return pre * inner;
}

// Spatial exponent T(w): log E over one unit-density PPP of the per-node
// Laplace factor, so that a field of density lambda contributes
// exp(lambda T).  Covers the near-field plateau, the LOS annulus and the
// NLOS annulus; nodes past r_max contribute nothing.
template <typename S>
S t_exponent(const S& w, const NetworkParams& p) {
    const double mm = static_cast<double>(p.m);
    const double aL = p.alpha_L;
    const double aN = p.alpha_N;
    const double beta = p.beta();
    const double r1 = p.r_min;
    const double r2 = p.r_max;

    S t1 = (s_pow(w * std::pow(r1, -aL) + mm, -mm) * std::pow(mm, mm) - 1.0) * (r1 * r1);
    S t2 = s_pow(w, p.delta_L()) * (xi1_impl(p.r_near, w, p) - xi1_impl(r1, w, p));
    S t3 = (w * beta) * (xi2_impl(r1, w, p) - xi2_impl(r2, w, p));
    S t4 = s_pow(w * beta, p.delta_N()) *
           ((xi3_impl(r1, w, p) - xi3_impl(r2, w, p)) * (1.0 / (2.0 + aN)));
    return (t1 + t2 + t3 + t4) * kPi;
}

// ---------------------------------------------------------------- inversion
// CCDF Pr(X > x) by Euler summation of the Bromwich integral of the
// log-Laplace transform logL (Abate & Whitt's alternating-series form).
template <typename LogL>
double euler_ccdf(LogL&& log_laplace, double x, const InversionParams& inv,
                  const char* what) {
    const double a = inv.a_ctrl;
    const int b_ctrl = inv.b_ctrl;
    const int c_ctrl = inv.c_ctrl;

    std::vector<double> partial(static_cast<std::size_t>(c_ctrl + b_ctrl + 1));
    double run = 0.0;
    for (int c = 0; c <= c_ctrl + b_ctrl; ++c) {
        const Complex s(a / (2.0 * x), kPi * c / x);
        const Complex v = std::exp(log_laplace(s)) / s;
        double term = (c == 0) ? 0.5 * v.real() : v.real();
        if (c % 2 == 1)
            term = -term;
        run += term;
        partial[static_cast<std::size_t>(c)] = run;
    }

    // Binomial average of the last b_ctrl+1 partial sums.
    double tot = 0.0;
    double binom = 1.0;  // C(b_ctrl, b)
    for (int b = 0; b <= b_ctrl; ++b) {
        tot += binom * partial[static_cast<std::size_t>(c_ctrl + b)];
        binom *= static_cast<double>(b_ctrl - b) / static_cast<double>(b + 1);
    }
    const double cdf_tail = std::pow(2.0, -b_ctrl) * std::exp(a / 2.0) / x * tot;
    return clamp_unit(1.0 - cdf_tail, what);
}

// Conditioned per-level channel terms: entry n is
// sum_{l<m} (-s_n)^l / l! * (d/ds)^l exp(g) at s_n, the Nakagami CCDF
// expansion of the reference link given transmit level n.
std::vector<double> rung_terms(double gamma_tr, const NetworkParams& params,
                               const PowerLevels& levels) {
    const double d0_gain = params.tx_pattern.g_max * params.rx_pattern.g_max;
    const double l_d0 =
        path_loss(params.d0, link_state(params.d0, params), params).value();
    const int order = params.m - 1;

    std::vector<double> inner(levels.k.size(), 0.0);
    for (std::size_t n = 0; n < levels.k.size(); ++n) {
        if (levels.k[n] <= 0.0)
            continue;
        const double s_n =
            params.m * gamma_tr / (levels.p_t[n] * d0_gain * l_d0);
        const DerivativeStack g =
            log_laplace_in_derivatives(s_n, order, params, levels);
        const DerivativeStack h = specfun::assemble_exp_derivatives(g);
        double acc = 0.0;
        double pow_s = 1.0;   // (-s_n)^l
        double fact = 1.0;    // l!
        for (int l = 0; l <= order; ++l) {
            acc += pow_s / fact * h.values[static_cast<std::size_t>(l)].real();
            pow_s *= -s_n;
            fact *= static_cast<double>(l + 1);
        }
        inner[n] = acc;
    }
    return inner;
}

} // namespace

double PowerLevels::coverage_mass() const {
    double acc = 0.0;
    for (double kn : k)
        acc += kn;
    return acc;
}

Complex laplace_ppt(Complex s, const NetworkParams& params) {
    if (s == Complex(0.0))
        return 1.0;
    const GainDistribution pmf = gain_pmf(params.pb_pattern, params.tx_pattern);
    Complex exponent = 0.0;
    if (params.lambda_p > 0.0) {
        for (const auto& e : pmf.entries)
            exponent += params.lambda_p * e.prob *
                        t_exponent(s * (params.p_p * e.gain), params);
    }
    return std::exp(exponent);
}

Complex xi1(double r, Complex s, double gain, const NetworkParams& params) {
    return xi1_impl(r, Complex(s * (params.p_p * gain)), params);
}

Complex xi2(double r, Complex s, double gain, const NetworkParams& params) {
    return xi2_impl(r, Complex(s * (params.p_p * gain)), params);
}

Complex xi3(double r, Complex s, double gain, const NetworkParams& params) {
    return xi3_impl(r, Complex(s * (params.p_p * gain)), params);
}

double power_coverage(double gamma_pt, const NetworkParams& params,
                      const InversionParams& inv) {
    params.validate();
    if (!(gamma_pt > 0.0))
        throw std::domain_error("power_coverage: threshold must be positive");
    return euler_ccdf([&](Complex s) {
        Complex exponent = 0.0;
        const GainDistribution pmf = gain_pmf(params.pb_pattern, params.tx_pattern);
        if (params.lambda_p > 0.0) {
            for (const auto& e : pmf.entries)
                exponent += params.lambda_p * e.prob *
                            t_exponent(s * (params.p_p * e.gain), params);
        }
        return exponent;
    }, gamma_pt, inv, "power_coverage");
}

double asymptotic_power_coverage(const NetworkParams& params) {
    params.validate();
    // With unbounded beacon power any beacon inside r_max activates the
    // transmitter, so the limit is the void probability complement.
    return 1.0 - std::exp(-kPi * params.lambda_p * params.r_max * params.r_max);
}

PowerLevels power_levels(const NetworkParams& params, const InversionParams& inv) {
    params.validate();
    const double cap = std::min(params.p_max1 / params.eta,
                                (1.0 - params.rho) / (params.eta * params.rho) * params.p_max2);
    if (!(cap > params.gamma_pt))
        throw numerical_error("power_levels: harvest cap " + std::to_string(cap) +
                              " W does not exceed the activation threshold");

    const int n = params.n_levels;
    const double lo_dbm = watts_to_dbm(params.gamma_pt);
    const double hi_dbm = watts_to_dbm(cap);

    PowerLevels levels;
    levels.n_levels = n;
    levels.step_db = (hi_dbm - lo_dbm) / n;
    levels.k.resize(static_cast<std::size_t>(n) + 1);
    levels.p_t.resize(static_cast<std::size_t>(n) + 1);
    levels.lambda_t_n.resize(static_cast<std::size_t>(n) + 1);

    const double slot_scale = params.eta * params.rho / (1.0 - params.rho);
    std::vector<double> tail(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        const double edge = dbm_to_watts(lo_dbm + i * levels.step_db);
        tail[static_cast<std::size_t>(i)] = power_coverage(edge, params, inv);
        levels.p_t[static_cast<std::size_t>(i)] = slot_scale * edge;
    }
    // Differencing the tail telescopes exactly: sum k equals tail[0].
    for (int i = 0; i < n; ++i)
        levels.k[static_cast<std::size_t>(i)] =
            tail[static_cast<std::size_t>(i)] - tail[static_cast<std::size_t>(i) + 1];
    levels.k[static_cast<std::size_t>(n)] = tail[static_cast<std::size_t>(n)];
    for (int i = 0; i <= n; ++i)
        levels.lambda_t_n[static_cast<std::size_t>(i)] =
            levels.k[static_cast<std::size_t>(i)] * params.lambda_t;
    return levels;
}

DerivativeStack log_laplace_in_derivatives(double s, int order,
                                           const NetworkParams& params,
                                           const PowerLevels& levels) {
    if (order < 0 || order > params.m - 1)
        throw std::domain_error("log_laplace_in_derivatives: order must be in [0, m-1]");
    if (!(s > 0.0))
        throw std::domain_error("log_laplace_in_derivatives: requires s > 0");
    if (levels.k.size() != levels.p_t.size() ||
        levels.k.size() != levels.lambda_t_n.size() || levels.k.empty())
        throw std::domain_error("log_laplace_in_derivatives: malformed power levels");

    const GainDistribution pmf = gain_pmf(params.tx_pattern, params.rx_pattern);
    Jet g = Jet::constant(0.0, order) - Jet::variable(s, order) * params.sigma2;
    for (std::size_t n = 0; n < levels.k.size(); ++n) {
        if (levels.lambda_t_n[n] <= 0.0)
            continue;
        for (const auto& e : pmf.entries)
            g = g + t_exponent(Jet::variable(s, order) * (levels.p_t[n] * e.gain), params) *
                        (levels.lambda_t_n[n] * e.prob);
    }

    // Jet coefficients are f^(j)/j!; the public stack carries the true
    // derivatives.
    DerivativeStack out;
    out.values.resize(static_cast<std::size_t>(order) + 1);
    double fact = 1.0;
    for (int j = 0; j <= order; ++j) {
        out.values[static_cast<std::size_t>(j)] = Complex(g[j] * fact, 0.0);
        fact *= static_cast<double>(j + 1);
    }
    return out;
}

Complex laplace_interference_plus_noise(Complex s, const NetworkParams& params,
                                        const PowerLevels& levels) {
    if (s == Complex(0.0))
        return 1.0;
    const GainDistribution pmf = gain_pmf(params.tx_pattern, params.rx_pattern);
    Complex g = -s * params.sigma2;
    for (std::size_t n = 0; n < levels.k.size(); ++n) {
        if (levels.lambda_t_n[n] <= 0.0)
            continue;
        for (const auto& e : pmf.entries)
            g += levels.lambda_t_n[n] * e.prob *
                 t_exponent(Complex(s * (levels.p_t[n] * e.gain)), params);
    }
    return std::exp(g);
}

double channel_coverage(double gamma_tr, const NetworkParams& params,
                        const PowerLevels& levels, const InversionParams&) {
    params.validate();
    if (!(gamma_tr > 0.0))
        throw std::domain_error("channel_coverage: threshold must be positive");
    if (!(params.d0 < params.r_min))
        throw std::domain_error("channel_coverage: requires d0 < r_min (LOS reference link)");
    const double mass = levels.coverage_mass();
    if (!(mass > 0.0))
        throw numerical_error("channel_coverage: activation probability is zero");

    const std::vector<double> inner = rung_terms(gamma_tr, params, levels);
    double acc = 0.0;
    for (std::size_t n = 0; n < inner.size(); ++n)
        acc += inner[n] * (levels.k[n] / mass);
    return clamp_unit(acc, "channel_coverage");
}

CoverageResult total_coverage(double gamma_pt, double gamma_tr,
                              const NetworkParams& params, const InversionParams& inv) {
    NetworkParams p = params;
    p.gamma_pt = gamma_pt;
    p.gamma_tr = gamma_tr;
    p.validate();
    if (!(p.d0 < p.r_min))
        throw std::domain_error("total_coverage: requires d0 < r_min (LOS reference link)");

    const PowerLevels levels = power_levels(p, inv);
    const double mass = levels.coverage_mass();

    CoverageResult res;
    res.source = ResultSource::analytic;
    res.power_cov = clamp_unit(mass, "total_coverage");
    if (mass <= 0.0)
        return res;  // inactive with certainty: channel and total are zero

    const std::vector<double> inner = rung_terms(gamma_tr, p, levels);
    double conditional = 0.0;
    for (std::size_t n = 0; n < inner.size(); ++n)
        conditional += inner[n] * (levels.k[n] / mass);
    const double product = mass * conditional;

    // Direct unconditioned ladder sum, accumulated in the opposite order;
    // must agree with the product form to fixed tolerance.
    double direct = 0.0;
    for (std::size_t n = inner.size(); n-- > 0;)
        direct += levels.k[n] * inner[n];
    if (std::abs(product - direct) > 1.0e-9)
        throw numerical_error("total_coverage: product and direct ladder sums disagree by " +
                              std::to_string(std::abs(product - direct)));

    res.channel_cov = clamp_unit(conditional, "total_coverage");
    res.total_cov = clamp_unit(product, "total_coverage");
    return res;
}

double asymptotic_total_coverage(const NetworkParams& params, const InversionParams& inv) {
    params.validate();
    // In the limit every transmitter is active at the top ladder level,
    // so all discretization mass sits at p_t[N].
    PowerLevels levels = power_levels(params, inv);
    const double apc = asymptotic_power_coverage(params);
    for (std::size_t n = 0; n < levels.k.size(); ++n) {
        levels.k[n] = 0.0;
        levels.lambda_t_n[n] = 0.0;
    }
    levels.k.back() = apc;
    levels.lambda_t_n.back() = apc * params.lambda_t;
    const double chan = channel_coverage(params.gamma_tr, params, levels, inv);
    return clamp_unit(apc * chan, "asymptotic_total_coverage");
}

} // namespace pbcov
