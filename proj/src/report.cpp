#include "pbcov/report.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace pbcov {

namespace {

constexpr const char* kToolVersion = "pbcov 1.0.0";

std::string fmt(double v) {
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

void write_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
    out << "curve,parameter,value,source,power_cov,channel_cov,total_cov,"
           "power_ci,channel_ci,total_ci,trials\n";
    for (const ResultRow& r : rows) {
        out << r.curve << ',' << r.parameter << ',';
        if (!r.parameter.empty())
            out << fmt(r.swept_value);
        out << ',' << r.source << ',' << fmt(r.cov.power_cov) << ','
            << fmt(r.cov.channel_cov) << ',' << fmt(r.cov.total_cov) << ','
            << fmt(r.cov.power_ci) << ',' << fmt(r.cov.channel_ci) << ','
            << fmt(r.cov.total_ci) << ',' << r.cov.trials << '\n';
    }
}

void write_json(const Scenario& scenario, const std::vector<ResultRow>& rows,
                std::ostream& out) {
    nlohmann::json doc;

    std::ostringstream cfg;
    save_scenario(scenario, cfg);
    doc["scenario"] = cfg.str();

    nlohmann::json jrows = nlohmann::json::array();
    for (const ResultRow& r : rows) {
        nlohmann::json jr;
        jr["curve"] = r.curve;
        if (!r.parameter.empty()) {
            jr["parameter"] = r.parameter;
            if (std::isfinite(r.swept_value))
                jr["value"] = r.swept_value;
            else
                jr["value"] = "inf";
        }
        jr["source"] = r.source;
        jr["power_cov"] = r.cov.power_cov;
        jr["channel_cov"] = r.cov.channel_cov;
        jr["total_cov"] = r.cov.total_cov;
        if (r.cov.trials > 0) {
            jr["trials"] = r.cov.trials;
            jr["power_ci"] = r.cov.power_ci;
            jr["channel_ci"] = r.cov.channel_ci;
            jr["total_ci"] = r.cov.total_ci;
        }
        jr["wall_time_s"] = r.wall_time_s;
        jrows.push_back(jr);
    }
    doc["rows"] = jrows;

    // Timestamps live only in this sidecar block so the CSV stays
    // byte-stable across reruns.
    char stamp[32];
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    doc["meta"] = {{"tool", kToolVersion}, {"timestamp", stamp}};

    out << doc.dump(2) << '\n';
}

} // namespace pbcov
