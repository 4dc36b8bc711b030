#pragma once
//
// Closed-form engine: Laplace transform of the aggregate harvested power
// over the beacon field, Euler-summation inversion of its CCDF, the
// discrete transmit-power ladder, and the power / channel / total coverage
// probabilities with their large-power asymptotics.
//
#include <complex>
#include <stdexcept>
#include <vector>

#include "pbcov/netmodel.hpp"
#include "pbcov/specfun.hpp"

namespace pbcov {

using specfun::Complex;
using specfun::DerivativeStack;

// Thrown when a numerical procedure produces an out-of-tolerance result
// (inversion outside [0,1] by more than the documented slack, degenerate
// ladder, inconsistent cross-checks).
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// Euler-summation controls of the Abate-Whitt style CCDF inversion.  The
// defaults give an inversion error near 1e-10.
struct InversionParams {
    double a_ctrl = 24.0;
    int b_ctrl = 20;
    int c_ctrl = 30;
};

// Discretized transmit-power ladder: level n holds the probability k[n]
// that an unconditioned transmitter lands in power bin n, the bin's
// transmit power p_t[n] (lower bin edge mapped through the harvest slot
// arithmetic), and the density lambda_t_n[n] = k[n] * lambda_t of the
// independently thinned transmitter process at that level.
struct PowerLevels {
    int n_levels = 0;      // N; vectors have N+1 entries
    double step_db = 0.0;  // dB spacing of the threshold grid
    std::vector<double> k;
    std::vector<double> p_t;
    std::vector<double> lambda_t_n;

    // Sum of k, i.e. the probability the transmitter is active.
    double coverage_mass() const;
};

enum class ResultSource { analytic, simulation };

struct CoverageResult {
    double power_cov = 0.0;
    double channel_cov = 0.0;
    double total_cov = 0.0;
    ResultSource source = ResultSource::analytic;
    long trials = 0;        // simulation only
    double power_ci = 0.0;  // 95% half-widths, simulation only
    double channel_ci = 0.0;
    double total_ci = 0.0;
};

// Laplace transform E[exp(-s P)] of the aggregate power harvested from the
// beacon field, as a product over the four effective-gain states.  Real
// and <= 1 in magnitude for real s >= 0; equals 1 at s = 0 and for an
// empty beacon field.
Complex laplace_ppt(Complex s, const NetworkParams& params);

// The three helper terms of the closed-form exponent, exactly as they
// appear in it.  `gain` is the effective-gain value G of the state being
// evaluated; the beacon power enters from params.  xi1 covers the LOS
// annulus via 2F1(1+m, m+delta_L; 1+m+delta_L; -m r^alpha_L/(s p_p G)),
// xi2 is the rational NLOS piece, xi3 the NLOS 2F1 piece with argument
// -r^alpha_N / (s p_p G beta).
Complex xi1(double r, Complex s, double gain, const NetworkParams& params);
Complex xi2(double r, Complex s, double gain, const NetworkParams& params);
Complex xi3(double r, Complex s, double gain, const NetworkParams& params);

// Tail probability Pr(P > gamma_pt) of the harvested power, via Euler
// summation of the Bromwich integral of laplace_ppt.  Truncation residue
// within 1e-8 of [0,1] is clamped; beyond that a numerical_error is thrown.
double power_coverage(double gamma_pt, const NetworkParams& params,
                      const InversionParams& inv);

// Limit of the power coverage as the beacon power grows without bound:
// the probability that at least one beacon is within r_max, namely
// 1 - exp(-pi lambda_p r_max^2).
double asymptotic_power_coverage(const NetworkParams& params);

// Builds the transmit-power ladder on a dB-uniform threshold grid from
// gamma_pt up to the harvest cap min(p_max1/eta, (1-rho)/(eta rho) p_max2).
// Throws numerical_error if the cap does not exceed gamma_pt.
PowerLevels power_levels(const NetworkParams& params, const InversionParams& inv);

// Log-Laplace exponent g(s) of interference-plus-noise at the reference
// receiver under the thinned-ladder model, with derivatives up to `order`
// (0 <= order <= m-1).  Computed with jet arithmetic; entry j of the result
// is the true j-th derivative g^(j)(s).
DerivativeStack log_laplace_in_derivatives(double s, int order,
                                           const NetworkParams& params,
                                           const PowerLevels& levels);

// exp(g(s)) for complex s: the Laplace transform of interference plus
// noise itself.
Complex laplace_interference_plus_noise(Complex s, const NetworkParams& params,
                                        const PowerLevels& levels);

// Probability that the reference link's SINR exceeds gamma_tr, conditioned
// on its transmitter being active: the Nakagami expansion
// sum_n sum_{l<m} (-s_n)^l/l! (d/ds)^l exp(g) |_{s_n} * k_n / sum k, with
// s_n = m gamma_tr / (p_t[n] D0 l(d0)).  Requires d0 < r_min (the reference
// link is always LOS) and a nonzero activation probability.
double channel_coverage(double gamma_tr, const NetworkParams& params,
                        const PowerLevels& levels, const InversionParams& inv);

// Product of power and channel coverage; also evaluated as the direct
// unconditioned ladder sum, and the two are required to agree to 1e-9.
CoverageResult total_coverage(double gamma_pt, double gamma_tr,
                              const NetworkParams& params, const InversionParams& inv);

// Total coverage in the infinite-beacon-power limit: all ladder mass sits
// at the top level, whose transmit power is min(rho/(1-rho) p_max1, p_max2).
double asymptotic_total_coverage(const NetworkParams& params, const InversionParams& inv);

} // namespace pbcov
