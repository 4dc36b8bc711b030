//
// pbcov: coverage analysis and simulation for power-beacon-assisted
// millimeter-wave ad hoc networks.
//
// Verbs:
//   analyze <config>      closed-form engine only
//   simulate <config>     closed-form plus Monte Carlo rows
//   reproduce <figure>    pre-built sweep (fig2..fig8); add --trials for MC
//   validate <config>     both engines plus an agreement report on stderr
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.
//
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "pbcov/report.hpp"
#include "pbcov/scenario.hpp"

namespace {

struct Options {
    std::string config_path;
    std::string figure;
    std::string out_path;
    std::string format = "csv";
    std::string mode;
    long trials = -1;
    long long seed = -1;
};

void apply_sim_overrides(pbcov::Scenario& sc, const Options& opt, bool create) {
    const bool any_override = opt.trials > 0 || opt.seed >= 0 || !opt.mode.empty();
    if (!sc.sim && (create || any_override))
        sc.sim = pbcov::SimConfig{};
    if (!sc.sim)
        return;
    if (opt.trials > 0)
        sc.sim->trials = opt.trials;
    if (opt.seed >= 0)
        sc.sim->seed = static_cast<std::uint64_t>(opt.seed);
    if (!opt.mode.empty())
        sc.sim->mode = opt.mode == "faithful" ? pbcov::SimMode::faithful
                                              : pbcov::SimMode::assumption_matched;
}

void emit(const pbcov::Scenario& sc, const std::vector<pbcov::ResultRow>& rows,
          const Options& opt) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!opt.out_path.empty()) {
        file.open(opt.out_path, std::ios::binary);
        if (!file)
            throw pbcov::config_error("cannot open output file '" + opt.out_path + "'");
        out = &file;
    }
    if (opt.format == "json")
        pbcov::write_json(sc, rows, *out);
    else
        pbcov::write_csv(rows, *out);
}

// Pairs each analytic row with the simulation row of the same sweep point
// and reports the absolute deltas against the simulation's confidence
// half-widths.
void agreement_report(const std::vector<pbcov::ResultRow>& rows) {
    int compared = 0;
    int outside = 0;
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        const pbcov::ResultRow& a = rows[i];
        const pbcov::ResultRow& s = rows[i + 1];
        if (a.source != "analytic" || (s.source != "faithful" && s.source != "matched"))
            continue;
        if (a.curve != s.curve || a.swept_value != s.swept_value)
            continue;
        ++compared;
        const double dp = std::abs(a.cov.power_cov - s.cov.power_cov);
        const double dc = std::abs(a.cov.channel_cov - s.cov.channel_cov);
        const double dt = std::abs(a.cov.total_cov - s.cov.total_cov);
        const bool ok = dp <= s.cov.power_ci + 1e-3 && dc <= s.cov.channel_ci + 1e-3 &&
                        dt <= s.cov.total_ci + 1e-3;
        if (!ok)
            ++outside;
        std::fprintf(stderr,
                     "%s%s%s: power |d|=%.4f (ci %.4f)  channel |d|=%.4f (ci %.4f)  "
                     "total |d|=%.4f (ci %.4f)%s\n",
                     a.curve.empty() ? "point" : a.curve.c_str(),
                     a.parameter.empty() ? "" : " ",
                     a.parameter.empty()
                         ? ""
                         : (a.parameter + "=" + std::to_string(a.swept_value)).c_str(),
                     dp, s.cov.power_ci, dc, s.cov.channel_ci, dt, s.cov.total_ci,
                     ok ? "" : "  [outside CI]");
    }
    std::fprintf(stderr, "agreement: %d points compared, %d outside CI+0.001\n",
                 compared, outside);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coverage analysis for wirelessly powered mmWave ad hoc networks"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", opt.out_path, "Output file (default: stdout)");
        sub->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--trials", opt.trials, "Monte Carlo trials per point");
        sub->add_option("--seed", opt.seed, "Simulation seed");
        sub->add_option("--mode", opt.mode, "Simulation mode")
            ->check(CLI::IsMember({"faithful", "matched"}));
    };

    CLI::App* analyze = app.add_subcommand("analyze", "Closed-form engine only");
    analyze->add_option("config", opt.config_path, "Scenario file")->required();
    add_common(analyze);

    CLI::App* simulate = app.add_subcommand("simulate", "Closed-form plus Monte Carlo");
    simulate->add_option("config", opt.config_path, "Scenario file")->required();
    add_common(simulate);

    CLI::App* reproduce =
        app.add_subcommand("reproduce", "Pre-built figure sweep (fig2..fig8)");
    reproduce->add_option("figure", opt.figure, "Figure name")->required();
    add_common(reproduce);

    CLI::App* validate =
        app.add_subcommand("validate", "Run both engines and report deltas");
    validate->add_option("config", opt.config_path, "Scenario file")->required();
    add_common(validate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        pbcov::Scenario sc;
        if (reproduce->parsed()) {
            sc = pbcov::figure_recipe(opt.figure);
            apply_sim_overrides(sc, opt, false);
        } else {
            sc = pbcov::load_scenario_file(opt.config_path);
            if (analyze->parsed())
                sc.sim.reset();
            else
                apply_sim_overrides(sc, opt, true);
        }

        const std::vector<pbcov::ResultRow> rows = pbcov::run(sc);
        emit(sc, rows, opt);
        if (validate->parsed())
            agreement_report(rows);
        return 0;
    } catch (const pbcov::config_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const pbcov::numerical_error& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    } catch (const pbcov::specfun::no_convergence& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    }
}
