#include "entrex/report_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <ostream>
#include <stdexcept>
#include <system_error>

namespace entrex {

namespace {

std::string to_chars_str(double value, std::chars_format fmt, int precision) {
    char buf[64];
    std::to_chars_result res =
        precision >= 0 ? std::to_chars(buf, buf + sizeof(buf), value, fmt, precision)
                       : std::to_chars(buf, buf + sizeof(buf), value);
    if (res.ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buf, res.ptr);
}

}  // namespace

std::string format_fixed9(double value) {
    return to_chars_str(value, std::chars_format::fixed, 9);
}

std::string format_shortest(double value) {
    return to_chars_str(value, std::chars_format::general, -1);
}

std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\n\r") == std::string::npos) return raw;
    std::string quoted = "\"";
    for (char c : raw) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json curve_to_json(const EntropyCurve& c) {
    return ordered_json{{"kappas", c.kappas}, {"values", c.values}};
}

EntropyCurve curve_from_json(const ordered_json& j) {
    EntropyCurve c;
    c.kappas = j.at("kappas").get<std::vector<double>>();
    c.values = j.at("values").get<std::vector<double>>();
    return c;
}

ordered_json record_to_json(const SweepRecord& r, bool below_original) {
    ordered_json j;
    if (r.params) {
        j["params"] = ordered_json{{"level", to_string(r.params->level)},
                                   {"scale", r.params->scale},
                                   {"scale_division", r.params->scale_division},
                                   {"dynamic", r.params->dynamic}};
    } else {
        j["params"] = nullptr;
    }
    j["shannon"] = r.shannon;
    j["curve"] = curve_to_json(r.curve);
    j["below_original"] = below_original;
    return j;
}

SweepRecord record_from_json(const ordered_json& j) {
    SweepRecord r;
    if (!j.at("params").is_null()) {
        const auto& p = j.at("params");
        r.params = RetinexParams{level_from_string(p.at("level").get<std::string>()),
                                 p.at("scale").get<int>(),
                                 p.at("scale_division").get<int>(),
                                 p.at("dynamic").get<double>()};
    }
    r.shannon = j.at("shannon").get<double>();
    r.curve = curve_from_json(j.at("curve"));
    return r;
}

}  // namespace

void write_report_json(std::ostream& os, const GridSpec& grid, const SweepReport& report) {
    ordered_json j;
    ordered_json levels = ordered_json::array();
    for (RetinexLevel l : grid.levels) levels.push_back(to_string(l));
    j["grid"] = ordered_json{{"levels", levels},
                             {"scales", grid.scales},
                             {"scale_divisions", grid.scale_divisions},
                             {"dynamics", grid.dynamics},
                             {"kappa_max", grid.kappa_max},
                             {"kappa_steps", grid.kappa_steps}};
    j["original"] = record_to_json(report.original, false);
    ordered_json records = ordered_json::array();
    for (std::size_t i = 0; i < report.records.size(); ++i) {
        const bool below = std::find(report.below_original.begin(),
                                     report.below_original.end(),
                                     i) != report.below_original.end();
        records.push_back(record_to_json(report.records[i], below));
    }
    j["records"] = std::move(records);
    j["ranking"] = report.ranking;
    j["crossings"] = report.crossings;
    os << j.dump(2) << '\n';
}

std::pair<GridSpec, SweepReport> read_report_json(std::istream& is) {
    ordered_json j = ordered_json::parse(is);

    GridSpec grid;
    const auto& g = j.at("grid");
    for (const auto& name : g.at("levels")) {
        grid.levels.push_back(level_from_string(name.get<std::string>()));
    }
    grid.scales = g.at("scales").get<std::vector<int>>();
    grid.scale_divisions = g.at("scale_divisions").get<std::vector<int>>();
    grid.dynamics = g.at("dynamics").get<std::vector<double>>();
    grid.kappa_max = g.at("kappa_max").get<double>();
    grid.kappa_steps = g.at("kappa_steps").get<int>();

    SweepReport report;
    report.original = record_from_json(j.at("original"));
    const auto& records = j.at("records");
    for (std::size_t i = 0; i < records.size(); ++i) {
        report.records.push_back(record_from_json(records[i]));
        if (records[i].at("below_original").get<bool>()) {
            report.below_original.push_back(i);
        }
    }
    report.ranking = j.at("ranking").get<std::vector<std::size_t>>();
    report.crossings = j.at("crossings").get<std::vector<double>>();
    return {std::move(grid), std::move(report)};
}

void write_curve_csv(std::ostream& os,
                     const std::vector<std::pair<std::string, const EntropyCurve*>>& curves) {
    if (curves.empty()) throw std::invalid_argument("curve CSV: no curves");
    const std::vector<double>& kappas = curves.front().second->kappas;
    for (const auto& [id, curve] : curves) {
        if (curve->kappas != kappas || curve->values.size() != kappas.size()) {
            throw std::invalid_argument("curve CSV: curves must share one kappa grid");
        }
    }

    os << "kappa";
    for (const auto& [id, curve] : curves) os << ',' << csv_field(id);
    os << '\n';
    for (std::size_t row = 0; row < kappas.size(); ++row) {
        os << format_fixed9(kappas[row]);
        for (const auto& [id, curve] : curves) os << ',' << format_fixed9(curve->values[row]);
        os << '\n';
    }
}

}  // namespace entrex
