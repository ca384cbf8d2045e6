#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "entrex/entropy.hpp"
#include "entrex/retinex.hpp"

namespace entrex {

/// Cartesian parameter grid plus the kappa sampling shared by all records.
struct GridSpec {
    std::vector<RetinexLevel> levels;
    std::vector<int> scales;
    std::vector<int> scale_divisions;
    std::vector<double> dynamics;
    double kappa_max = 0.1;
    int kappa_steps = 11;
};

void validate(const GridSpec& g);

/// One evaluated variant. params is empty for the unfiltered original.
struct SweepRecord {
    std::optional<RetinexParams> params;
    EntropyCurve curve;
    double shannon = 0.0;  // curve value at kappa = 0

    bool operator==(const SweepRecord&) const = default;
};

struct SweepReport {
    SweepRecord original;
    std::vector<SweepRecord> records;
    /// Record indices sorted by descending Shannon entropy; ties broken by
    /// descending curve mean, then enumeration order.
    std::vector<std::size_t> ranking;
    /// Left endpoints of kappa grid intervals where any two curves (the
    /// original included) swap order.
    std::vector<double> crossings;
    /// Indices of records whose Shannon entropy is strictly below the original's.
    std::vector<std::size_t> below_original;

    bool operator==(const SweepReport&) const = default;
};

/// Cartesian product in lexicographic order of the field lists.
std::vector<RetinexParams> enumerate_grid(const GridSpec& g);

/// Filter the image and compute the entropy curve of the result.
SweepRecord evaluate(const ImageRgb8& image, const RetinexParams& params, const GridSpec& g);

SweepReport rank(SweepRecord original, std::vector<SweepRecord> records);

/// Evaluate the original plus every enumerated parameter set (in parallel)
/// and rank the results. Output is independent of the evaluation order.
SweepReport run_sweep(const ImageRgb8& image, const GridSpec& g);

/// Stable identifier, e.g. "low_s240_n3_d1.2"; also the --save-images stem.
std::string variant_id(const RetinexParams& p);

}  // namespace entrex
