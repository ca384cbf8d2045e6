#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "entrex/numformat.hpp"
#include "entrex/sweep.hpp"

namespace entrex {

/// RFC 4180 style: quotes the field if it contains a comma, quote or newline.
std::string csv_field(const std::string& raw);

/// Sweep report as JSON: grid echo, original + per-variant records with
/// curves, ranking, crossings and below-original flags. Round-trips
/// losslessly through read_report_json.
void write_report_json(std::ostream& os, const GridSpec& grid, const SweepReport& report);
std::pair<GridSpec, SweepReport> read_report_json(std::istream& is);

/// Curves as CSV: header "kappa,<id>,...", one row per kappa grid point,
/// values with nine decimal places. All curves must share the kappa grid.
void write_curve_csv(std::ostream& os,
                     const std::vector<std::pair<std::string, const EntropyCurve*>>& curves);

}  // namespace entrex
