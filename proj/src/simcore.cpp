#include "pbcov/simcore.hpp"

#include <cmath>
#include <stdexcept>

namespace pbcov {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Counter-based per-trial seeding: trial i draws from an mt19937_64 seeded
// with a splitmix64-finalized function of (seed, global trial index).
// Streams are independent of trial execution order, so partitioned runs
// (trial_offset) reproduce a monolithic run bit for bit.
std::uint64_t splitmix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

std::mt19937_64 trial_rng(std::uint64_t seed, long global_index) {
    const std::uint64_t counter =
        seed + (static_cast<std::uint64_t>(global_index) + 1) * 0x9E3779B97F4A7C15ULL;
    return std::mt19937_64(splitmix64(counter));
}

double effective_padding(const SimConfig& sim, const NetworkParams& params) {
    return sim.window_padding < 0.0 ? 2.0 * params.r_max : sim.window_padding;
}

struct TrialCounts {
    long active = 0;
    long channel = 0;  // SINR success among active trials
};

} // namespace

std::vector<Point> sample_ppp(double density, Point center, double radius,
                              std::mt19937_64& rng) {
    if (density < 0.0 || radius < 0.0)
        throw std::domain_error("sample_ppp: negative density or radius");
    std::vector<Point> pts;
    if (density == 0.0 || radius == 0.0)
        return pts;
    std::poisson_distribution<long> count(density * kPi * radius * radius);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const long n = count(rng);
    pts.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        const double ang = 2.0 * kPi * u01(rng);
        const double rad = radius * std::sqrt(u01(rng));  // area-uniform
        pts.push_back({center.x + rad * std::cos(ang), center.y + rad * std::sin(ang)});
    }
    return pts;
}

double simulate_pt(Point tx, const std::vector<Point>& beacons,
                   const NetworkParams& params, std::mt19937_64& rng) {
    const GainDistribution pmf = gain_pmf(params.pb_pattern, params.tx_pattern);
    double total = 0.0;
    for (const Point& b : beacons) {
        const double d = std::hypot(b.x - tx.x, b.y - tx.y);
        const LinkState state = link_state(d, params);
        if (state == LinkState::out)
            continue;
        const double gain = sample_gain(pmf, rng);
        const double fading = sample_fading(state, params.m, rng);
        total += params.p_p * gain * fading * path_loss(d, state, params).value();
    }
    return total;
}

double simulate_pt(Point tx, const NetworkParams& params, std::mt19937_64& rng) {
    const std::vector<Point> beacons =
        sample_ppp(params.lambda_p, tx, params.r_max, rng);
    return simulate_pt(tx, beacons, params, rng);
}

std::optional<double> transmit_power(double p_pt, const NetworkParams& params) {
    if (p_pt < params.gamma_pt)
        return std::nullopt;
    // Linear harvest-slot scaling, clipped by whichever binds first: the
    // per-slot storage cap or the amplifier cap.
    const double linear = params.eta * params.rho / (1.0 - params.rho) * p_pt;
    const double storage = params.rho / (1.0 - params.rho) * params.p_max1;
    return std::min(linear, std::min(storage, params.p_max2));
}

std::vector<double> sample_harvested_power(const NetworkParams& params,
                                           long trials, std::uint64_t seed) {
    params.validate();
    if (trials < 1)
        throw std::domain_error("sample_harvested_power: need at least one trial");
    std::vector<double> out(static_cast<std::size_t>(trials));
    for (long i = 0; i < trials; ++i) {
        std::mt19937_64 rng = trial_rng(seed, i);
        out[static_cast<std::size_t>(i)] = simulate_pt(Point{0.0, 0.0}, params, rng);
    }
    return out;
}

double estimate_power_coverage(const NetworkParams& params, long trials,
                               std::uint64_t seed) {
    const std::vector<double> draws = sample_harvested_power(params, trials, seed);
    long hits = 0;
    for (double p : draws)
        hits += (p >= params.gamma_pt) ? 1 : 0;
    return static_cast<double>(hits) / static_cast<double>(trials);
}

double wilson_half_width(long successes, long n) {
    if (n <= 0)
        return 0.0;
    constexpr double z = 1.959963984540054;  // 97.5% normal quantile
    const double nn = static_cast<double>(n);
    const double phat = static_cast<double>(successes) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    return z * std::sqrt(phat * (1.0 - phat) / nn + z2 / (4.0 * nn * nn)) / denom;
}

namespace {

// One faithful trial: a shared beacon field over the padded window, the
// reference TX at (d0, 0) and the receiver at the origin, interferers on
// the r_max disk (farther ones are OUT toward the receiver and contribute
// nothing), each transmitter's activity and power from its own harvest.
void faithful_trial(const NetworkParams& params, double padding,
                    std::mt19937_64& rng, TrialCounts& counts) {
    const std::vector<Point> beacons =
        sample_ppp(params.lambda_p, Point{0.0, 0.0}, params.r_max + padding, rng);

    const double p_ref = simulate_pt(Point{params.d0, 0.0}, beacons, params, rng);
    const bool active = p_ref >= params.gamma_pt;
    if (active)
        ++counts.active;

    const std::vector<Point> txs =
        sample_ppp(params.lambda_t, Point{0.0, 0.0}, params.r_max, rng);
    const GainDistribution pmf_tr = gain_pmf(params.tx_pattern, params.rx_pattern);
    double interference = 0.0;
    for (const Point& t : txs) {
        const double p_i = simulate_pt(t, beacons, params, rng);
        const std::optional<double> p_tx = transmit_power(p_i, params);
        if (!p_tx)
            continue;
        const double r = std::hypot(t.x, t.y);
        const LinkState state = link_state(r, params);
        const double gain = sample_gain(pmf_tr, rng);
        const double fading = sample_fading(state, params.m, rng);
        interference += *p_tx * gain * fading * path_loss(r, state, params).value();
    }

    if (!active)
        return;
    const LinkState ref_state = link_state(params.d0, params);
    if (ref_state == LinkState::out)
        return;  // reference link has no path; SINR event cannot occur
    const double p_tx0 = *transmit_power(p_ref, params);
    const double d0_gain = params.tx_pattern.g_max * params.rx_pattern.g_max;
    const double fading0 = sample_fading(ref_state, params.m, rng);
    const double signal =
        p_tx0 * d0_gain * fading0 * path_loss(params.d0, ref_state, params).value();
    if (signal / (interference + params.sigma2) > params.gamma_tr)
        ++counts.channel;
}

// One assumption-matched trial: activation is a Bernoulli draw on the
// ladder mass, the reference level comes from the conditioned ladder, and
// interferers arrive as independently thinned per-level processes --
// exactly the analytic model's independence structure, so the channel
// event is evaluated on every trial and the joint event is the product.
void matched_trial(const NetworkParams& params, const PowerLevels& levels,
                   double mass, std::mt19937_64& rng, TrialCounts& counts,
                   long& joint) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const bool active = u01(rng) < mass;
    if (active)
        ++counts.active;

    // Reference transmit level from the conditioned ladder k_n / mass.
    double u = u01(rng) * mass;
    std::size_t level = levels.k.size() - 1;
    for (std::size_t n = 0; n < levels.k.size(); ++n) {
        const double kn = levels.k[n] > 0.0 ? levels.k[n] : 0.0;
        if (u < kn) {
            level = n;
            break;
        }
        u -= kn;
    }

    const GainDistribution pmf_tr = gain_pmf(params.tx_pattern, params.rx_pattern);
    double interference = 0.0;
    for (std::size_t n = 0; n < levels.k.size(); ++n) {
        if (levels.lambda_t_n[n] <= 0.0)
            continue;
        const std::vector<Point> txs =
            sample_ppp(levels.lambda_t_n[n], Point{0.0, 0.0}, params.r_max, rng);
        for (const Point& t : txs) {
            const double r = std::hypot(t.x, t.y);
            const LinkState state = link_state(r, params);
            const double gain = sample_gain(pmf_tr, rng);
            const double fading = sample_fading(state, params.m, rng);
            interference +=
                levels.p_t[n] * gain * fading * path_loss(r, state, params).value();
        }
    }

    const LinkState ref_state = link_state(params.d0, params);
    if (ref_state == LinkState::out)
        return;
    const double d0_gain = params.tx_pattern.g_max * params.rx_pattern.g_max;
    const double fading0 = sample_fading(ref_state, params.m, rng);
    const double signal = levels.p_t[level] * d0_gain * fading0 *
                          path_loss(params.d0, ref_state, params).value();
    if (signal / (interference + params.sigma2) > params.gamma_tr) {
        ++counts.channel;
        if (active)
            ++joint;
    }
}

} // namespace

CoverageResult simulate_coverage(const NetworkParams& params, const SimConfig& sim) {
    params.validate();
    if (sim.trials < 1)
        throw std::domain_error("simulate_coverage: need at least one trial");

    CoverageResult res;
    res.source = ResultSource::simulation;
    res.trials = sim.trials;

    if (sim.mode == SimMode::faithful) {
        const double padding = effective_padding(sim, params);
        TrialCounts counts;
        for (long i = 0; i < sim.trials; ++i) {
            std::mt19937_64 rng = trial_rng(sim.seed, sim.trial_offset + i);
            faithful_trial(params, padding, rng, counts);
        }
        res.power_cov = static_cast<double>(counts.active) / static_cast<double>(sim.trials);
        res.power_ci = wilson_half_width(counts.active, sim.trials);
        // Channel coverage conditions on activity by rejection; the joint
        // event is exactly "active and SINR above threshold".
        res.channel_cov = counts.active > 0
                              ? static_cast<double>(counts.channel) /
                                    static_cast<double>(counts.active)
                              : 0.0;
        res.channel_ci = wilson_half_width(counts.channel, counts.active);
        res.total_cov = static_cast<double>(counts.channel) / static_cast<double>(sim.trials);
        res.total_ci = wilson_half_width(counts.channel, sim.trials);
        return res;
    }

    // Assumption-matched mode.
    const PowerLevels levels = power_levels(params, InversionParams{});
    const double mass = levels.coverage_mass();
    TrialCounts counts;
    long joint = 0;
    for (long i = 0; i < sim.trials; ++i) {
        std::mt19937_64 rng = trial_rng(sim.seed, sim.trial_offset + i);
        matched_trial(params, levels, mass, rng, counts, joint);
    }
    res.power_cov = static_cast<double>(counts.active) / static_cast<double>(sim.trials);
    res.power_ci = wilson_half_width(counts.active, sim.trials);
    res.channel_cov = static_cast<double>(counts.channel) / static_cast<double>(sim.trials);
    res.channel_ci = wilson_half_width(counts.channel, sim.trials);
    res.total_cov = static_cast<double>(joint) / static_cast<double>(sim.trials);
    res.total_ci = wilson_half_width(joint, sim.trials);
    return res;
}

} // namespace pbcov
