#pragma once
//
// Physical-layer model shared by the analytic engine and the simulator:
// sectorized antenna patterns and their effective-gain distributions,
// three-state blockage, bounded multi-slope path loss, fading draws, and
// the unit conversions used at the tool boundary.
//
// Internal convention: strict SI.  Lengths in meters, powers in watts,
// densities in nodes per square meter.  dBm, dB, degrees and per-km^2
// exist only at the configuration boundary.
//
#include <array>
#include <optional>
#include <random>

namespace pbcov {

// Two-level sectorized beam pattern: main-lobe gain over beam-width theta,
// side-lobe gain elsewhere.  Gains are linear power ratios, theta radians.
struct AntennaPattern {
    double g_max = 1.0;
    double g_min = 1.0;
    double theta = 0.0;

    // Mean gain toward a uniformly random direction.
    double mean_gain() const;
};

// Joint effective gain of a transmit/receive pattern pair whose main lobes
// are independently and uniformly oriented: a four-point distribution over
// {g_max*g_max, g_max*g_min, g_min*g_max, g_min*g_min}.
struct GainDistribution {
    struct Entry {
        double gain;
        double prob;
    };
    std::array<Entry, 4> entries;

    double mean() const;
};

enum class LinkState { los, nlos, out };

struct LinkStateProbs {
    double p_los;
    double p_nlos;
    double p_out;
};

// Every scenario parameter, in SI units.  The single source of truth handed
// to both engines.
struct NetworkParams {
    double lambda_p = 50e-6;  // power-beacon density, nodes/m^2
    double lambda_t = 100e-6; // transmitter density, nodes/m^2
    double d0 = 20.0;         // reference transmitter-receiver distance, m
    double r_near = 1.0;      // near-field radius where path loss plateaus, m
    double r_min = 100.0;     // line-of-sight region radius, m
    double r_max = 200.0;     // outage region radius, m
    double alpha_L = 2.0;     // LOS path-loss exponent
    double alpha_N = 4.0;     // NLOS path-loss exponent
    int m = 5;                // Nakagami shape of LOS fading
    AntennaPattern pb_pattern{100.0, 0.1, 0.5235987755982988};  // 20/-10 dB, 30 deg
    AntennaPattern tx_pattern{10.0, 0.1, 0.7853981633974483};   // 10/-10 dB, 45 deg
    AntennaPattern rx_pattern{10.0, 0.1, 0.7853981633974483};
    double p_p = 10.0;        // beacon transmit power, W
    double sigma2 = 1e-6;     // receiver noise power, W
    double rho = 0.5;         // fraction of the slot spent harvesting
    double eta = 0.5;         // RF-to-DC conversion efficiency
    double gamma_pt = 1e-5;   // power-circuit activation threshold, W
    double p_max1 = 0.1;      // harvested-energy cap per slot (as power), W
    double p_max2 = 1.0;      // transmit-power cap, W
    double gamma_tr = 1.0;    // SINR threshold, linear ratio
    int n_levels = 10;        // transmit-power discretization steps N

    // Derived constants of the path-loss model.
    double beta() const;     // continuity constant r_min^(alpha_N - alpha_L)
    double delta_L() const;  // 2 / alpha_L
    double delta_N() const;  // 2 / alpha_N

    // Throws std::domain_error naming the offending field if any invariant
    // fails (positivity, r_near < r_min < r_max, 2 <= alpha_L <= alpha_N,
    // 1 <= m <= 8, rho in (0,1), eta in (0,1], ...).
    void validate() const;
};

// Deterministic three-state blockage: LOS below r_min, NLOS on
// [r_min, r_max), OUT from r_max on.  Boundaries belong to the outer state
// (unit-step convention u(0) = 1).
LinkStateProbs link_state_probs(double r, const NetworkParams& params);
LinkState link_state(double r, const NetworkParams& params);

// Bounded multi-slope path loss.  Plateau r_near^(-alpha_L) inside the
// near field (1 exactly at the default r_near = 1 m), r^(-alpha_L) on
// [r_near, r_min), beta * r^(-alpha_N) on [r_min, r_max) -- continuous at
// r_min by the choice of beta.  OUT links have no propagation path at all:
// the result is empty rather than zero so that arithmetic on a missing link
// is a type error instead of a silent 0.
std::optional<double> path_loss(double r, LinkState state, const NetworkParams& params);

// Four-row joint gain PMF for a pair of independently, uniformly oriented
// patterns: row probabilities are the products of main/side lobe alignment
// probabilities theta/(2 pi) and 1 - theta/(2 pi).
GainDistribution gain_pmf(const AntennaPattern& a, const AntennaPattern& b);

// Sectorized-pattern equivalent of a uniform planar square array with
// half-wavelength element spacing and n_elements elements (Venugopal,
// Valenti, Heath, "Device-to-device millimeter wave communications:
// interference, coverage, rate, and finite topologies", IEEE TWC 2016).
AntennaPattern array_to_pattern(int n_elements);

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);  // domain error for watts <= 0

// Isotropic free-space power density p / (4 pi d^2) at distance d from a
// radiator of total power p; used for RF-exposure feasibility checks.
double power_density_at(double distance_m, double p_p_watts);

// Unit-mean channel power gain for a link in the given state: Gamma with
// shape m and scale 1/m (Nakagami-m power) for LOS, exponential with mean 1
// (Rayleigh power) for NLOS.  Must not be called for OUT links.
double sample_fading(LinkState state, int m, std::mt19937_64& rng);

// Gain draw from a four-point distribution.
double sample_gain(const GainDistribution& dist, std::mt19937_64& rng);

} // namespace pbcov
