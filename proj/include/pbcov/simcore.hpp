#pragma once
//
// Monte Carlo engine.  Two modes:
//  - faithful: continuous harvested powers, one shared beacon field per
//    trial, interferer activity and transmit power derived from each
//    interferer's own harvest -- no discretization and no independence
//    shortcuts;
//  - assumption_matched: interferers drawn from the independently thinned
//    discrete-power ladders, matching the analytic derivation's assumptions
//    so that residual disagreement isolates implementation error.
//
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "pbcov/analytic.hpp"
#include "pbcov/netmodel.hpp"

namespace pbcov {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

enum class SimMode { faithful, assumption_matched };

struct SimConfig {
    long trials = 100000;
    SimMode mode = SimMode::faithful;
    std::uint64_t seed = 1;
    // Extra radius beyond r_max over which the shared beacon field is
    // sampled, so every candidate interferer inside r_max sees its complete
    // harvesting disk.  Negative means "use the default 2 * r_max".
    double window_padding = -1.0;
    // First global trial index; lets partitioned runs reproduce exactly the
    // per-trial RNG streams of one monolithic run.
    long trial_offset = 0;
};

// One transmitter's slot outcome.
struct SampleOutcome {
    double p_pt = 0.0;             // harvested (pre-conversion) power, W
    bool active = false;           // p_pt >= gamma_pt
    double p_tx = 0.0;             // transmit power if active, else 0
    std::optional<double> sinr;    // reference-link SINR; absent if inactive
};

// Homogeneous Poisson field on a disk: Poisson count, uniform positions.
std::vector<Point> sample_ppp(double density, Point center, double radius,
                              std::mt19937_64& rng);

// Aggregate power harvested by a node at `tx` from the given beacon
// positions: sum of p_p * gain * fading * path_loss over beacons within
// r_max, with an independent pattern-pair gain and state-matched fading
// draw per link.  Beacons beyond r_max contribute exactly nothing.
double simulate_pt(Point tx, const std::vector<Point>& beacons,
                   const NetworkParams& params, std::mt19937_64& rng);

// Convenience overload that samples a fresh beacon field on the r_max disk
// around `tx` first.
double simulate_pt(Point tx, const NetworkParams& params, std::mt19937_64& rng);

// Harvest-then-transmit power mapping: empty below the activation
// threshold; eta rho/(1-rho) * p_pt on the linear branch; capped at
// min(rho/(1-rho) p_max1, p_max2) once either storage or amplifier limit
// binds.
std::optional<double> transmit_power(double p_pt, const NetworkParams& params);

// Reference-only harvest draws (one shared-field trial each), usable both
// for fast power-coverage estimation and for histogram checks of the
// discretization ladder.
std::vector<double> sample_harvested_power(const NetworkParams& params,
                                           long trials, std::uint64_t seed);

// Fraction of sample_harvested_power draws at or above gamma_pt.
double estimate_power_coverage(const NetworkParams& params, long trials,
                               std::uint64_t seed);

// Full coverage simulation.  Power coverage over all trials; channel
// coverage conditioned on the reference transmitter being active
// (rejection); total coverage as the joint event.  95% Wilson intervals.
// Bit-identical results for identical config on the same build.
CoverageResult simulate_coverage(const NetworkParams& params, const SimConfig& sim);

// Half-width of the 95% Wilson score interval for `successes` out of `n`.
double wilson_half_width(long successes, long n);

} // namespace pbcov
