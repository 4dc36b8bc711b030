#include "pbcov/netmodel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pbcov {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

void require(bool ok, const char* field, const std::string& why) {
    if (!ok)
        throw std::domain_error(std::string("NetworkParams.") + field + ": " + why);
}

void check_pattern(const AntennaPattern& p, const char* name) {
    require(p.g_max > 0.0, name, "main-lobe gain must be positive");
    require(p.g_min > 0.0, name, "side-lobe gain must be positive");
    require(p.g_min <= p.g_max, name, "side-lobe gain must not exceed main-lobe gain");
    require(p.theta > 0.0 && p.theta <= kTwoPi, name, "beam width must be in (0, 2 pi]");
}

} // namespace

double AntennaPattern::mean_gain() const {
    const double p_main = theta / kTwoPi;
    return p_main * g_max + (1.0 - p_main) * g_min;
}

double GainDistribution::mean() const {
    double acc = 0.0;
    for (const Entry& e : entries)
        acc += e.gain * e.prob;
    return acc;
}

double NetworkParams::beta() const {
    return std::pow(r_min, alpha_N - alpha_L);
}

double NetworkParams::delta_L() const { return 2.0 / alpha_L; }

double NetworkParams::delta_N() const { return 2.0 / alpha_N; }

void NetworkParams::validate() const {
    require(lambda_p >= 0.0, "lambda_p", "density must be nonnegative");
    require(lambda_t >= 0.0, "lambda_t", "density must be nonnegative");
    require(d0 > 0.0, "d0", "reference distance must be positive");
    require(r_near > 0.0, "r_near", "near-field radius must be positive");
    require(r_near < r_min, "r_near", "near-field radius must lie below r_min");
    require(r_min < r_max, "r_min", "LOS radius must lie below r_max");
    require(alpha_L >= 2.0, "alpha_L", "path-loss exponent must be at least 2");
    require(alpha_L <= alpha_N, "alpha_N", "NLOS exponent must be at least the LOS exponent");
    require(m >= 1 && m <= 8, "m", "Nakagami shape must be an integer in [1, 8]");
    check_pattern(pb_pattern, "pb_pattern");
    check_pattern(tx_pattern, "tx_pattern");
    check_pattern(rx_pattern, "rx_pattern");
    require(p_p > 0.0, "p_p", "beacon power must be positive");
    require(sigma2 >= 0.0, "sigma2", "noise power must be nonnegative");
    require(rho > 0.0 && rho < 1.0, "rho", "harvest fraction must be in (0, 1)");
    require(eta > 0.0 && eta <= 1.0, "eta", "conversion efficiency must be in (0, 1]");
    require(gamma_pt > 0.0, "gamma_pt", "activation threshold must be positive");
    require(p_max1 > 0.0, "p_max1", "harvest cap must be positive");
    require(p_max2 > 0.0, "p_max2", "transmit cap must be positive");
    require(gamma_tr > 0.0, "gamma_tr", "SINR threshold must be positive");
    require(n_levels >= 1, "n_levels", "discretization needs at least one level");
}

LinkStateProbs link_state_probs(double r, const NetworkParams& params) {
    switch (link_state(r, params)) {
    case LinkState::los:
        return {1.0, 0.0, 0.0};
    case LinkState::nlos:
        return {0.0, 1.0, 0.0};
    default:
        return {0.0, 0.0, 1.0};
    }
}

LinkState link_state(double r, const NetworkParams& params) {
    if (r < 0.0)
        throw std::domain_error("link_state: negative distance");
    // Boundaries belong to the farther state: the indicator of "within r"
    // is 1 strictly below r (unit step with u(0) = 1 at the complement).
    if (r < params.r_min)
        return LinkState::los;
    if (r < params.r_max)
        return LinkState::nlos;
    return LinkState::out;
}

std::optional<double> path_loss(double r, LinkState state, const NetworkParams& params) {
    switch (state) {
    case LinkState::los:
        if (r < params.r_near)
            return std::pow(params.r_near, -params.alpha_L);
        return std::pow(r, -params.alpha_L);
    case LinkState::nlos:
        return params.beta() * std::pow(r, -params.alpha_N);
    default:
        return std::nullopt;
    }
}

GainDistribution gain_pmf(const AntennaPattern& a, const AntennaPattern& b) {
    const double pa = a.theta / kTwoPi;
    const double pb = b.theta / kTwoPi;
    return GainDistribution{{{
        {a.g_max * b.g_max, pa * pb},
        {a.g_max * b.g_min, pa * (1.0 - pb)},
        {a.g_min * b.g_max, (1.0 - pa) * pb},
        {a.g_min * b.g_min, (1.0 - pa) * (1.0 - pb)},
    }}};
}

AntennaPattern array_to_pattern(int n_elements) {
    if (n_elements < 1)
        throw std::domain_error("array_to_pattern: need at least one element");
    // Uniform planar square array with half-wavelength spacing, reduced to
    // the two-level sectorized equivalent (Venugopal, Valenti, Heath,
    // IEEE Trans. Wireless Commun. 2016): main-lobe gain N, beam width
    // sqrt(3)/sqrt(N), side lobes from the residual radiated power.
    const double n = static_cast<double>(n_elements);
    const double rt = std::sqrt(n);
    const double s3 = std::sqrt(3.0);
    const double sin_term = std::sin(s3 / (2.0 * rt));
    const double g_min = (rt - s3 / kTwoPi * n * sin_term) / (rt - s3 / kTwoPi * sin_term);
    return AntennaPattern{n, g_min, s3 / rt};
}

double dbm_to_watts(double dbm) {
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double watts_to_dbm(double watts) {
    if (!(watts > 0.0))
        throw std::domain_error("watts_to_dbm: requires a positive power");
    return 10.0 * std::log10(watts) + 30.0;
}

double power_density_at(double distance_m, double p_p_watts) {
    if (!(distance_m > 0.0))
        throw std::domain_error("power_density_at: requires a positive distance");
    return p_p_watts / (4.0 * kPi * distance_m * distance_m);
}

double sample_fading(LinkState state, int m, std::mt19937_64& rng) {
    switch (state) {
    case LinkState::los: {
        // Nakagami-m power gain: Gamma(shape m, scale 1/m), unit mean.
        std::gamma_distribution<double> d(static_cast<double>(m), 1.0 / m);
        return d(rng);
    }
    case LinkState::nlos: {
        // Rayleigh power gain: Exp(1).
        std::exponential_distribution<double> d(1.0);
        return d(rng);
    }
    default:
        throw std::logic_error("sample_fading: no fading on an absent link");
    }
}

double sample_gain(const GainDistribution& dist, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    double u = u01(rng);
    for (const GainDistribution::Entry& e : dist.entries) {
        if (u < e.prob)
            return e.gain;
        u -= e.prob;
    }
    return dist.entries.back().gain;  // guard against roundoff in the walk
}

} // namespace pbcov
