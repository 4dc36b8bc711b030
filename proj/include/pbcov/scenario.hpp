#pragma once
//
// Tool-boundary layer: scenario files with explicit unit suffixes, sweep
// and curve-variant handling, and the pre-built sweeps that reproduce the
// reference figures at desk scale.
//
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pbcov/analytic.hpp"
#include "pbcov/simcore.hpp"

namespace pbcov {

// Scenario-file or command-line mistakes: unknown keys, missing or wrong
// unit suffixes, values violating model invariants.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// A sweep names one parameter (see apply_parameter for the accepted names)
// and the values it takes, in the unit that name implies.
struct SweepSpec {
    std::string parameter;
    std::vector<double> values;
};

// A curve variant: label plus parameter overrides applied on top of the
// base parameters, same name/unit vocabulary as sweeps.
struct CurveSpec {
    std::string label;
    std::map<std::string, double> overrides;
};

struct Scenario {
    NetworkParams params;
    InversionParams inv;
    std::optional<SimConfig> sim;
    std::optional<SweepSpec> sweep;
    std::vector<CurveSpec> curves;     // empty means one unlabeled curve
    bool append_asymptote = false;     // add an infinite-beacon-power row per curve

    void validate() const;             // throws config_error
};

// One computed table row.  swept_value is NaN when there is no sweep;
// source is "analytic", "faithful", "matched", or "asymptotic".
struct ResultRow {
    std::string curve;
    std::string parameter;
    double swept_value = 0.0;
    std::string source;
    CoverageResult cov;
    double wall_time_s = 0.0;
};

// Applies one named parameter to params.  Accepted names: the SI fields
// (lambda_p, lambda_t, d0, r_near, r_min, r_max, alpha_L, alpha_N, m, p_p,
// sigma2, rho, eta, gamma_pt, p_max1, p_max2, gamma_tr, n_levels) plus
// boundary-unit views (lambda_p_per_km2, lambda_t_per_km2, gamma_pt_dbm,
// p_p_dbm, sigma2_dbm, p_max1_dbm, p_max2_dbm, gamma_tr_db, gamma_tr_dbm)
// and antenna-array views (n_tx_rx_elements, n_pb_elements,
// tx_rx_g_max_db, tx_rx_g_min_db, tx_rx_theta_deg).  gamma_tr_dbm is the
// figure-axis convention: a threshold labeled x dBm means the linear ratio
// 10^((x-30)/10).  Throws config_error for unknown names.
void apply_parameter(NetworkParams& params, const std::string& name, double value);

// Scenario file round trip.  The format is line-oriented key = value with
// [network] / [inversion] / [simulation] / [sweep] / [curve "label"]
// sections; dimensioned values carry mandatory unit suffixes
// (m, W, dBm, dB, linear, deg, rad, per_km2, per_m2).
Scenario load_scenario(std::istream& in);
Scenario load_scenario_file(const std::string& path);
void save_scenario(const Scenario& sc, std::ostream& out);

// Runs the scenario: per curve and sweep value, an analytic row always and
// a simulation row when sim is configured; asymptote rows when requested.
std::vector<ResultRow> run(const Scenario& scenario);

// Pre-built sweep reproducing one reference figure (fig2..fig8).  Throws
// config_error for unknown names, listing the valid ones.
Scenario figure_recipe(const std::string& name);

} // namespace pbcov
