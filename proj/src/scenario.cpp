#include "pbcov/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace pbcov {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok)
        out.push_back(tok);
    return out;
}

double to_number(const std::string& tok, const std::string& where) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(tok, &pos);
        if (pos != tok.size())
            throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw config_error(where + ": '" + tok + "' is not a number");
    }
}

long to_integer(const std::string& tok, const std::string& where) {
    const double v = to_number(tok, where);
    if (v != std::floor(v))
        throw config_error(where + ": expected an integer, got '" + tok + "'");
    return static_cast<long>(v);
}

// A value-with-unit pair pulled from the token stream.  Dimensioned fields
// must carry one of the listed unit suffixes; bare numbers are rejected.
double take_quantity(const std::vector<std::string>& toks, std::size_t& i,
                     const std::string& where,
                     const std::vector<std::pair<std::string, double (*)(double)>>& units,
                     const std::string& expected) {
    if (i >= toks.size())
        throw config_error(where + ": missing value (expected " + expected + ")");
    const double v = to_number(toks[i], where);
    ++i;
    if (i >= toks.size())
        throw config_error(where + ": missing unit suffix (expected " + expected + ")");
    const std::string unit = lower(toks[i]);
    ++i;
    for (const auto& u : units) {
        if (unit == u.first)
            return u.second(v);
    }
    throw config_error(where + ": unknown unit '" + toks[i - 1] + "' (expected " + expected + ")");
}

double id_unit(double v) { return v; }
double per_km2_unit(double v) { return v * 1.0e-6; }
double km_unit(double v) { return v * 1000.0; }
double mw_unit(double v) { return v * 1.0e-3; }
double db_unit(double v) { return std::pow(10.0, v / 10.0); }
double deg_unit(double v) { return v * kPi / 180.0; }

const std::vector<std::pair<std::string, double (*)(double)>> kDensityUnits = {
    {"per_m2", id_unit}, {"per_km2", per_km2_unit}};
const std::vector<std::pair<std::string, double (*)(double)>> kLengthUnits = {
    {"m", id_unit}, {"km", km_unit}};
const std::vector<std::pair<std::string, double (*)(double)>> kPowerUnits = {
    {"w", id_unit}, {"mw", mw_unit}, {"dbm", dbm_to_watts}};
const std::vector<std::pair<std::string, double (*)(double)>> kRatioUnits = {
    {"linear", id_unit}, {"db", db_unit}};
const std::vector<std::pair<std::string, double (*)(double)>> kAngleUnits = {
    {"rad", id_unit}, {"deg", deg_unit}};

double parse_density(const std::string& val, const std::string& where) {
    const auto toks = split_ws(val);
    std::size_t i = 0;
    const double v = take_quantity(toks, i, where, kDensityUnits, "'<value> per_km2|per_m2'");
    if (i != toks.size())
        throw config_error(where + ": trailing tokens after value");
    return v;
}

double parse_length(const std::string& val, const std::string& where) {
    const auto toks = split_ws(val);
    std::size_t i = 0;
    const double v = take_quantity(toks, i, where, kLengthUnits, "'<value> m|km'");
    if (i != toks.size())
        throw config_error(where + ": trailing tokens after value");
    return v;
}

double parse_power(const std::string& val, const std::string& where) {
    const auto toks = split_ws(val);
    std::size_t i = 0;
    const double v = take_quantity(toks, i, where, kPowerUnits, "'<value> dBm|W|mW'");
    if (i != toks.size())
        throw config_error(where + ": trailing tokens after value");
    return v;
}

double parse_ratio(const std::string& val, const std::string& where) {
    const auto toks = split_ws(val);
    std::size_t i = 0;
    const double v = take_quantity(toks, i, where, kRatioUnits, "'<value> dB|linear'");
    if (i != toks.size())
        throw config_error(where + ": trailing tokens after value");
    return v;
}

double parse_bare(const std::string& val, const std::string& where) {
    const auto toks = split_ws(val);
    if (toks.size() != 1)
        throw config_error(where + ": expected a single dimensionless number");
    return to_number(toks[0], where);
}

long parse_bare_int(const std::string& val, const std::string& where) {
    const auto toks = split_ws(val);
    if (toks.size() != 1)
        throw config_error(where + ": expected a single integer");
    return to_integer(toks[0], where);
}

AntennaPattern parse_beam(const std::string& val, const std::string& where) {
    // "<g_max> dB|linear <g_min> dB|linear <theta> deg|rad"
    const auto toks = split_ws(val);
    std::size_t i = 0;
    AntennaPattern p;
    p.g_max = take_quantity(toks, i, where + " main-lobe gain", kRatioUnits, "'<value> dB|linear'");
    p.g_min = take_quantity(toks, i, where + " side-lobe gain", kRatioUnits, "'<value> dB|linear'");
    p.theta = take_quantity(toks, i, where + " beam width", kAngleUnits, "'<value> deg|rad'");
    if (i != toks.size())
        throw config_error(where + ": trailing tokens after beam triple");
    return p;
}

std::string fmt_exact(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::uint64_t splitmix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

// Per-(curve, sweep point) simulation seed, so sweep points draw
// independent randomness while staying deterministic in the file seed.
std::uint64_t point_seed(std::uint64_t base, std::size_t curve_idx, std::size_t value_idx) {
    std::uint64_t z = base;
    z = splitmix64(z + (static_cast<std::uint64_t>(curve_idx) + 1) * 0x9E3779B97F4A7C15ULL);
    z = splitmix64(z + (static_cast<std::uint64_t>(value_idx) + 1) * 0xD1B54A32D192ED03ULL);
    return z;
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

void apply_parameter(NetworkParams& params, const std::string& name, double value) {
    const std::string where = "parameter '" + name + "'";
    auto as_int = [&](double v) {
        if (v != std::floor(v))
            throw config_error(where + ": expected an integer value");
        return static_cast<int>(v);
    };

    if (name == "lambda_p") params.lambda_p = value;
    else if (name == "lambda_p_per_km2") params.lambda_p = value * 1.0e-6;
    else if (name == "lambda_t") params.lambda_t = value;
    else if (name == "lambda_t_per_km2") params.lambda_t = value * 1.0e-6;
    else if (name == "d0") params.d0 = value;
    else if (name == "r_near") params.r_near = value;
    else if (name == "r_min") params.r_min = value;
    else if (name == "r_max") params.r_max = value;
    else if (name == "alpha_l") params.alpha_L = value;
    else if (name == "alpha_n") params.alpha_N = value;
    else if (name == "m") params.m = as_int(value);
    else if (name == "n_levels") params.n_levels = as_int(value);
    else if (name == "p_p") params.p_p = value;
    else if (name == "p_p_dbm") params.p_p = dbm_to_watts(value);
    else if (name == "sigma2") params.sigma2 = value;
    else if (name == "sigma2_dbm") params.sigma2 = dbm_to_watts(value);
    else if (name == "rho") params.rho = value;
    else if (name == "eta") params.eta = value;
    else if (name == "gamma_pt") params.gamma_pt = value;
    else if (name == "gamma_pt_dbm") params.gamma_pt = dbm_to_watts(value);
    else if (name == "p_max1") params.p_max1 = value;
    else if (name == "p_max1_dbm") params.p_max1 = dbm_to_watts(value);
    else if (name == "p_max2") params.p_max2 = value;
    else if (name == "p_max2_dbm") params.p_max2 = dbm_to_watts(value);
    else if (name == "gamma_tr") params.gamma_tr = value;
    else if (name == "gamma_tr_db") params.gamma_tr = std::pow(10.0, value / 10.0);
    // Figure-axis convention: an SINR threshold labeled in dBm maps to the
    // linear ratio 10^((x-30)/10).
    else if (name == "gamma_tr_dbm") params.gamma_tr = std::pow(10.0, (value - 30.0) / 10.0);
    else if (name == "n_tx_rx_elements") {
        const AntennaPattern p = array_to_pattern(as_int(value));
        params.tx_pattern = p;
        params.rx_pattern = p;
    } else if (name == "n_pb_elements") {
        params.pb_pattern = array_to_pattern(as_int(value));
    } else if (name == "tx_rx_g_max_db") {
        const double g = std::pow(10.0, value / 10.0);
        params.tx_pattern.g_max = g;
        params.rx_pattern.g_max = g;
    } else if (name == "tx_rx_g_min_db") {
        const double g = std::pow(10.0, value / 10.0);
        params.tx_pattern.g_min = g;
        params.rx_pattern.g_min = g;
    } else if (name == "tx_rx_theta_deg") {
        const double th = value * kPi / 180.0;
        params.tx_pattern.theta = th;
        params.rx_pattern.theta = th;
    } else {
        throw config_error("unknown parameter '" + name + "'");
    }
}

void Scenario::validate() const {
    try {
        params.validate();
    } catch (const std::domain_error& e) {
        throw config_error(e.what());
    }
    if (sweep) {
        if (sweep->values.empty())
            throw config_error("[sweep]: value list is empty");
        NetworkParams probe = params;
        apply_parameter(probe, sweep->parameter, sweep->values.front());
    }
    if (append_asymptote && !sweep)
        throw config_error("[sweep]: append_asymptote requires a sweep");
    std::set<std::string> labels;
    for (const CurveSpec& c : curves) {
        if (c.label.empty())
            throw config_error("[curve]: label must not be empty");
        if (!labels.insert(c.label).second)
            throw config_error("[curve \"" + c.label + "\"]: duplicate label");
        NetworkParams probe = params;
        for (const auto& kv : c.overrides)
            apply_parameter(probe, kv.first, kv.second);
    }
    if (sim && sim->trials < 1)
        throw config_error("[simulation] trials: need at least one trial");
}

Scenario load_scenario(std::istream& in) {
    Scenario sc;
    std::string section;
    CurveSpec* cur_curve = nullptr;
    std::string line;
    int lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find_first_of("#;");
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const std::string at = "line " + std::to_string(lineno);

        if (line.front() == '[') {
            if (line.back() != ']')
                throw config_error(at + ": malformed section header");
            const std::string head = trim(line.substr(1, line.size() - 2));
            if (head.rfind("curve", 0) == 0) {
                const std::size_t q1 = head.find('"');
                const std::size_t q2 = head.rfind('"');
                if (q1 == std::string::npos || q2 <= q1)
                    throw config_error(at + ": expected [curve \"label\"]");
                sc.curves.push_back(CurveSpec{head.substr(q1 + 1, q2 - q1 - 1), {}});
                cur_curve = &sc.curves.back();
                section = "curve";
            } else {
                section = lower(head);
                cur_curve = nullptr;
                if (section != "network" && section != "inversion" &&
                    section != "simulation" && section != "sweep")
                    throw config_error(at + ": unknown section [" + head + "]");
                if (section == "simulation" && !sc.sim)
                    sc.sim = SimConfig{};
                if (section == "sweep" && !sc.sweep)
                    sc.sweep = SweepSpec{};
            }
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error(at + ": expected 'key = value'");
        const std::string key = lower(trim(line.substr(0, eq)));
        const std::string val = trim(line.substr(eq + 1));
        const std::string where = at + " [" + section + "] " + key;
        if (key.empty() || val.empty())
            throw config_error(where + ": empty key or value");

        if (section == "network") {
            NetworkParams& p = sc.params;
            if (key == "lambda_p") p.lambda_p = parse_density(val, where);
            else if (key == "lambda_t") p.lambda_t = parse_density(val, where);
            else if (key == "d0") p.d0 = parse_length(val, where);
            else if (key == "r_near") p.r_near = parse_length(val, where);
            else if (key == "r_min") p.r_min = parse_length(val, where);
            else if (key == "r_max") p.r_max = parse_length(val, where);
            else if (key == "alpha_l") p.alpha_L = parse_bare(val, where);
            else if (key == "alpha_n") p.alpha_N = parse_bare(val, where);
            else if (key == "m") p.m = static_cast<int>(parse_bare_int(val, where));
            else if (key == "pb_beam") p.pb_pattern = parse_beam(val, where);
            else if (key == "tx_beam") p.tx_pattern = parse_beam(val, where);
            else if (key == "rx_beam") p.rx_pattern = parse_beam(val, where);
            else if (key == "p_p") p.p_p = parse_power(val, where);
            else if (key == "sigma2") p.sigma2 = parse_power(val, where);
            else if (key == "rho") p.rho = parse_bare(val, where);
            else if (key == "eta") p.eta = parse_bare(val, where);
            else if (key == "gamma_pt") p.gamma_pt = parse_power(val, where);
            else if (key == "p_max1") p.p_max1 = parse_power(val, where);
            else if (key == "p_max2") p.p_max2 = parse_power(val, where);
            else if (key == "gamma_tr") p.gamma_tr = parse_ratio(val, where);
            else if (key == "n_levels") p.n_levels = static_cast<int>(parse_bare_int(val, where));
            else throw config_error(where + ": unknown key");
        } else if (section == "inversion") {
            if (key == "a_ctrl") sc.inv.a_ctrl = parse_bare(val, where);
            else if (key == "b_ctrl") sc.inv.b_ctrl = static_cast<int>(parse_bare_int(val, where));
            else if (key == "c_ctrl") sc.inv.c_ctrl = static_cast<int>(parse_bare_int(val, where));
            else throw config_error(where + ": unknown key");
        } else if (section == "simulation") {
            SimConfig& s = *sc.sim;
            if (key == "trials") s.trials = parse_bare_int(val, where);
            else if (key == "seed") s.seed = static_cast<std::uint64_t>(parse_bare_int(val, where));
            else if (key == "trial_offset") s.trial_offset = parse_bare_int(val, where);
            else if (key == "window_padding") s.window_padding = parse_length(val, where);
            else if (key == "mode") {
                const std::string m = lower(val);
                if (m == "faithful") s.mode = SimMode::faithful;
                else if (m == "matched" || m == "assumption_matched")
                    s.mode = SimMode::assumption_matched;
                else throw config_error(where + ": expected faithful|matched");
            } else throw config_error(where + ": unknown key");
        } else if (section == "sweep") {
            if (key == "parameter") sc.sweep->parameter = val;
            else if (key == "values") {
                sc.sweep->values.clear();
                for (const std::string& tok : split_ws(val))
                    sc.sweep->values.push_back(to_number(tok, where));
            } else if (key == "range") {
                const auto toks = split_ws(val);
                if (toks.size() != 3)
                    throw config_error(where + ": expected 'range = first last step'");
                const double lo = to_number(toks[0], where);
                const double hi = to_number(toks[1], where);
                const double step = to_number(toks[2], where);
                if (!(step > 0.0) || hi < lo)
                    throw config_error(where + ": need first <= last and step > 0");
                sc.sweep->values.clear();
                for (int i = 0;; ++i) {
                    const double v = lo + i * step;
                    if (v > hi + 1.0e-9 * step)
                        break;
                    sc.sweep->values.push_back(std::min(v, hi));
                }
            } else if (key == "append_asymptote") {
                const std::string b = lower(val);
                if (b == "true" || b == "1") sc.append_asymptote = true;
                else if (b == "false" || b == "0") sc.append_asymptote = false;
                else throw config_error(where + ": expected true|false");
            } else throw config_error(where + ": unknown key");
        } else if (section == "curve") {
            // Keys use the apply_parameter vocabulary; units are implied
            // by the parameter name, so values are bare numbers.
            cur_curve->overrides[key] = parse_bare(val, where);
        } else {
            throw config_error(at + ": key outside any section");
        }
    }

    if (sc.sweep && sc.sweep->parameter.empty())
        throw config_error("[sweep]: missing 'parameter'");
    return sc;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw config_error("cannot open scenario file '" + path + "'");
    return load_scenario(in);
}

void save_scenario(const Scenario& sc, std::ostream& out) {
    // Canonical serialization uses the SI units the structs store, so a
    // save/load round trip is bit-exact.
    const NetworkParams& p = sc.params;
    auto beam = [](const AntennaPattern& a) {
        return fmt_exact(a.g_max) + " linear " + fmt_exact(a.g_min) + " linear " +
               fmt_exact(a.theta) + " rad";
    };
    out << "[network]\n";
    out << "lambda_p = " << fmt_exact(p.lambda_p) << " per_m2\n";
    out << "lambda_t = " << fmt_exact(p.lambda_t) << " per_m2\n";
    out << "d0 = " << fmt_exact(p.d0) << " m\n";
    out << "r_near = " << fmt_exact(p.r_near) << " m\n";
    out << "r_min = " << fmt_exact(p.r_min) << " m\n";
    out << "r_max = " << fmt_exact(p.r_max) << " m\n";
    out << "alpha_l = " << fmt_exact(p.alpha_L) << "\n";
    out << "alpha_n = " << fmt_exact(p.alpha_N) << "\n";
    out << "m = " << p.m << "\n";
    out << "pb_beam = " << beam(p.pb_pattern) << "\n";
    out << "tx_beam = " << beam(p.tx_pattern) << "\n";
    out << "rx_beam = " << beam(p.rx_pattern) << "\n";
    out << "p_p = " << fmt_exact(p.p_p) << " W\n";
    out << "sigma2 = " << fmt_exact(p.sigma2) << " W\n";
    out << "rho = " << fmt_exact(p.rho) << "\n";
    out << "eta = " << fmt_exact(p.eta) << "\n";
    out << "gamma_pt = " << fmt_exact(p.gamma_pt) << " W\n";
    out << "p_max1 = " << fmt_exact(p.p_max1) << " W\n";
    out << "p_max2 = " << fmt_exact(p.p_max2) << " W\n";
    out << "gamma_tr = " << fmt_exact(p.gamma_tr) << " linear\n";
    out << "n_levels = " << p.n_levels << "\n";

    out << "\n[inversion]\n";
    out << "a_ctrl = " << fmt_exact(sc.inv.a_ctrl) << "\n";
    out << "b_ctrl = " << sc.inv.b_ctrl << "\n";
    out << "c_ctrl = " << sc.inv.c_ctrl << "\n";

    if (sc.sim) {
        out << "\n[simulation]\n";
        out << "trials = " << sc.sim->trials << "\n";
        out << "mode = " << (sc.sim->mode == SimMode::faithful ? "faithful" : "matched") << "\n";
        out << "seed = " << sc.sim->seed << "\n";
        if (sc.sim->window_padding >= 0.0)
            out << "window_padding = " << fmt_exact(sc.sim->window_padding) << " m\n";
        if (sc.sim->trial_offset != 0)
            out << "trial_offset = " << sc.sim->trial_offset << "\n";
    }

    if (sc.sweep) {
        out << "\n[sweep]\n";
        out << "parameter = " << sc.sweep->parameter << "\n";
        out << "values =";
        for (double v : sc.sweep->values)
            out << " " << fmt_exact(v);
        out << "\n";
        if (sc.append_asymptote)
            out << "append_asymptote = true\n";
    }

    for (const CurveSpec& c : sc.curves) {
        out << "\n[curve \"" << c.label << "\"]\n";
        for (const auto& kv : c.overrides)
            out << kv.first << " = " << fmt_exact(kv.second) << "\n";
    }
}

std::vector<ResultRow> run(const Scenario& scenario) {
    scenario.validate();

    std::vector<CurveSpec> curves = scenario.curves;
    if (curves.empty())
        curves.push_back(CurveSpec{"", {}});
    const std::string pname = scenario.sweep ? scenario.sweep->parameter : "";

    std::vector<ResultRow> rows;
    for (std::size_t ci = 0; ci < curves.size(); ++ci) {
        NetworkParams base = scenario.params;
        for (const auto& kv : curves[ci].overrides)
            apply_parameter(base, kv.first, kv.second);

        std::vector<double> values;
        if (scenario.sweep)
            values = scenario.sweep->values;
        else
            values.push_back(std::numeric_limits<double>::quiet_NaN());

        for (std::size_t vi = 0; vi < values.size(); ++vi) {
            NetworkParams p = base;
            if (scenario.sweep)
                apply_parameter(p, pname, values[vi]);
            p.validate();

            auto t0 = std::chrono::steady_clock::now();
            const CoverageResult ana =
                total_coverage(p.gamma_pt, p.gamma_tr, p, scenario.inv);
            rows.push_back(ResultRow{curves[ci].label, pname, values[vi], "analytic",
                                     ana, elapsed_s(t0)});

            if (scenario.sim) {
                SimConfig sim = *scenario.sim;
                sim.seed = point_seed(scenario.sim->seed, ci, vi);
                t0 = std::chrono::steady_clock::now();
                const CoverageResult mc = simulate_coverage(p, sim);
                const char* tag =
                    sim.mode == SimMode::faithful ? "faithful" : "matched";
                rows.push_back(ResultRow{curves[ci].label, pname, values[vi], tag, mc,
                                         elapsed_s(t0)});
            }
        }

        if (scenario.append_asymptote) {
            auto t0 = std::chrono::steady_clock::now();
            CoverageResult asym;
            asym.source = ResultSource::analytic;
            asym.power_cov = asymptotic_power_coverage(base);
            asym.total_cov = asymptotic_total_coverage(base, scenario.inv);
            asym.channel_cov =
                asym.power_cov > 0.0 ? asym.total_cov / asym.power_cov : 0.0;
            rows.push_back(ResultRow{curves[ci].label, pname,
                                     std::numeric_limits<double>::infinity(),
                                     "asymptotic", asym, elapsed_s(t0)});
        }
    }
    return rows;
}

Scenario figure_recipe(const std::string& name) {
    auto linspace = [](double lo, double hi, double step) {
        std::vector<double> v;
        for (int i = 0;; ++i) {
            const double x = lo + i * step;
            if (x > hi + 1.0e-9 * step)
                break;
            v.push_back(std::min(x, hi));
        }
        return v;
    };

    Scenario sc;  // stock parameter defaults
    if (name == "fig2") {
        // Power coverage against the activation threshold, two beacon
        // densities.
        sc.sweep = SweepSpec{"gamma_pt_dbm", linspace(-30.0, 0.0, 2.5)};
        sc.curves = {CurveSpec{"lp10", {{"lambda_p_per_km2", 10.0}}},
                     CurveSpec{"lp50", {{"lambda_p_per_km2", 50.0}}}};
    } else if (name == "fig3") {
        // Channel and total coverage against the SINR threshold, four
        // density pairs.
        sc.sweep = SweepSpec{"gamma_tr_dbm", linspace(-10.0, 30.0, 4.0)};
        sc.curves = {
            CurveSpec{"lp50-lt500", {{"lambda_p_per_km2", 50.0}, {"lambda_t_per_km2", 500.0}}},
            CurveSpec{"lp50-lt250", {{"lambda_p_per_km2", 50.0}, {"lambda_t_per_km2", 250.0}}},
            CurveSpec{"lp10-lt100", {{"lambda_p_per_km2", 10.0}, {"lambda_t_per_km2", 100.0}}},
            CurveSpec{"lp10-lt50", {{"lambda_p_per_km2", 10.0}, {"lambda_t_per_km2", 50.0}}}};
    } else if (name == "fig4") {
        // Coverage against beacon power with the large-power asymptote.
        sc.sweep = SweepSpec{"p_p_dbm", linspace(20.0, 80.0, 5.0)};
        sc.curves = {CurveSpec{"rmin50", {{"r_min", 50.0}}},
                     CurveSpec{"rmin100", {{"r_min", 100.0}}}};
        sc.append_asymptote = true;
    } else if (name == "fig5") {
        // Activation-threshold sweep under two TX/RX beam designs.
        sc.sweep = SweepSpec{"gamma_pt_dbm", linspace(-30.0, 0.0, 2.5)};
        sc.curves = {CurveSpec{"beam20db-30deg",
                               {{"tx_rx_g_max_db", 20.0},
                                {"tx_rx_g_min_db", -10.0},
                                {"tx_rx_theta_deg", 30.0}}},
                     CurveSpec{"beam10db-45deg",
                               {{"tx_rx_g_max_db", 10.0},
                                {"tx_rx_g_min_db", -10.0},
                                {"tx_rx_theta_deg", 45.0}}}};
    } else if (name == "fig6") {
        // Antenna-element scaling of TX/RX arrays for three beacon arrays.
        sc.sweep = SweepSpec{"n_tx_rx_elements", linspace(2.0, 30.0, 2.0)};
        sc.curves = {CurveSpec{"np4", {{"n_pb_elements", 4.0}}},
                     CurveSpec{"np16", {{"n_pb_elements", 16.0}}},
                     CurveSpec{"np36", {{"n_pb_elements", 36.0}}}};
    } else if (name == "fig7") {
        // Harvest-cap sweep for three slot splits.
        sc.sweep = SweepSpec{"p_max1_dbm", linspace(0.0, 50.0, 5.0)};
        sc.curves = {CurveSpec{"rho0.2", {{"rho", 0.2}}},
                     CurveSpec{"rho0.5", {{"rho", 0.5}}},
                     CurveSpec{"rho0.8", {{"rho", 0.8}}}};
    } else if (name == "fig8") {
        // Transmit-cap sweep at two beacon powers, storage cap opened up.
        sc.params.p_max1 = dbm_to_watts(50.0);
        sc.sweep = SweepSpec{"p_max2_dbm", linspace(20.0, 40.0, 2.5)};
        sc.curves = {CurveSpec{"pp30dbm", {{"p_p_dbm", 30.0}}},
                     CurveSpec{"pp50dbm", {{"p_p_dbm", 50.0}}}};
    } else {
        throw config_error("unknown figure '" + name +
                           "' (valid: fig2 fig3 fig4 fig5 fig6 fig7 fig8)");
    }
    return sc;
}

} // namespace pbcov
