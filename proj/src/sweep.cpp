#include "entrex/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "entrex/detail/parallel.hpp"
#include "entrex/numformat.hpp"

namespace entrex {

void validate(const GridSpec& g) {
    if (g.levels.empty() || g.scales.empty() || g.scale_divisions.empty() ||
        g.dynamics.empty()) {
        throw std::invalid_argument("grid: every parameter list must be non-empty");
    }
    for (int s : g.scales) {
        if (s < 3) throw std::invalid_argument("grid: scales must be >= 3");
    }
    for (int n : g.scale_divisions) {
        if (n < 1 || n > 8) throw std::invalid_argument("grid: scale divisions must lie in 1..8");
    }
    for (double d : g.dynamics) {
        if (!(d > 0.0)) throw std::invalid_argument("grid: dynamics must be > 0");
    }
    if (!(g.kappa_max > 0.0)) throw std::invalid_argument("grid: kappa_max must be > 0");
    if (g.kappa_steps < 2) throw std::invalid_argument("grid: kappa_steps must be >= 2");
}

std::vector<RetinexParams> enumerate_grid(const GridSpec& g) {
    validate(g);
    std::vector<RetinexParams> out;
    out.reserve(g.levels.size() * g.scales.size() * g.scale_divisions.size() *
                g.dynamics.size());
    for (RetinexLevel level : g.levels) {
        for (int scale : g.scales) {
            for (int division : g.scale_divisions) {
                for (double dynamic : g.dynamics) {
                    out.push_back(RetinexParams{level, scale, division, dynamic});
                }
            }
        }
    }
    return out;
}

SweepRecord evaluate(const ImageRgb8& image, const RetinexParams& params,
                     const GridSpec& g) {
    SweepRecord rec;
    rec.params = params;
    const ImageRgb8 filtered = msrcr(image, params);
    rec.curve = entropy_curve(to_distribution(grey_histogram(filtered)), g.kappa_max,
                              g.kappa_steps);
    rec.shannon = rec.curve.values[0];
    return rec;
}

namespace {

double curve_mean(const EntropyCurve& c) {
    double sum = 0.0;
    for (double v : c.values) sum += v;
    return sum / static_cast<double>(c.values.size());
}

}  // namespace

SweepReport rank(SweepRecord original, std::vector<SweepRecord> records) {
    if (records.empty()) {
        throw std::invalid_argument("rank: need at least one record");
    }

    SweepReport report;
    report.ranking.resize(records.size());
    std::iota(report.ranking.begin(), report.ranking.end(), std::size_t{0});
    std::vector<double> means(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) means[i] = curve_mean(records[i].curve);
    std::sort(report.ranking.begin(), report.ranking.end(),
              [&](std::size_t a, std::size_t b) {
                  if (records[a].shannon != records[b].shannon) {
                      return records[a].shannon > records[b].shannon;
                  }
                  if (means[a] != means[b]) return means[a] > means[b];
                  return a < b;
              });

    for (std::size_t i = 0; i < records.size(); ++i) {
        if (records[i].shannon < original.shannon) report.below_original.push_back(i);
    }

    // Crossings over every pair of curves, the original's included: the left
    // kappa of each grid interval across which the pairwise order flips.
    std::vector<const EntropyCurve*> curves;
    curves.push_back(&original.curve);
    for (const auto& r : records) curves.push_back(&r.curve);
    std::set<double> crossing_kappas;
    for (std::size_t a = 0; a + 1 < curves.size(); ++a) {
        for (std::size_t b = a + 1; b < curves.size(); ++b) {
            const auto& va = curves[a]->values;
            const auto& vb = curves[b]->values;
            for (std::size_t i = 0; i + 1 < va.size(); ++i) {
                const double d0 = va[i] - vb[i];
                const double d1 = va[i + 1] - vb[i + 1];
                if (d0 * d1 < 0.0) crossing_kappas.insert(curves[a]->kappas[i]);
            }
        }
    }
    report.crossings.assign(crossing_kappas.begin(), crossing_kappas.end());

    report.original = std::move(original);
    report.records = std::move(records);
    return report;
}

SweepReport run_sweep(const ImageRgb8& image, const GridSpec& g) {
    const std::vector<RetinexParams> grid = enumerate_grid(g);

    SweepRecord original;
    original.curve =
        entropy_curve(to_distribution(grey_histogram(image)), g.kappa_max, g.kappa_steps);
    original.shannon = original.curve.values[0];

    std::vector<SweepRecord> records(grid.size());
    detail::parallel_for(0, grid.size(), [&](std::size_t i) {
        records[i] = evaluate(image, grid[i], g);
    });
    return rank(std::move(original), std::move(records));
}

std::string variant_id(const RetinexParams& p) {
    std::string id = to_string(p.level);
    id += "_s" + std::to_string(p.scale);
    id += "_n" + std::to_string(p.scale_division);
    id += "_d" + format_shortest(p.dynamic);
    return id;
}

}  // namespace entrex
