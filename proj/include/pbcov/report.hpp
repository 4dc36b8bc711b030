#pragma once
//
// Result serialization: deterministic CSV for plotting pipelines, JSON
// envelope with the run configuration and per-row timings for archival.
//
#include <iosfwd>
#include <string>
#include <vector>

#include "pbcov/scenario.hpp"

namespace pbcov {

// Fixed column order, %.12g numbers, no timestamps: identical inputs and
// seeds produce byte-identical files.
// curve,parameter,value,source,power_cov,channel_cov,total_cov,
// power_ci,channel_ci,total_ci,trials
void write_csv(const std::vector<ResultRow>& rows, std::ostream& out);

// JSON envelope: scenario echo, rows including wall_time_s, and a meta
// block (tool version, ISO-8601 timestamp).  The timestamp lives only
// here, never in the CSV.
void write_json(const Scenario& scenario, const std::vector<ResultRow>& rows,
                std::ostream& out);

} // namespace pbcov
