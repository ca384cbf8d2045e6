#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "entrex/image.hpp"

namespace entrex {

/// Grey-tone counts over the 256 8-bit tones.
struct Histogram256 {
    std::array<std::uint64_t, 256> counts{};
    std::uint64_t total = 0;
};

/// Normalized frequency of the 256 grey tones; entries sum to 1.
struct ProbDist {
    std::array<double, 256> p{};
};

/// Normalized 256x256 joint frequency matrix for an image pair (a, b).
/// Entry p[a_tone * 256 + b_tone]. Marginals are kept alongside the matrix:
/// when built from an image pair they come from the integer counts, so they
/// match the single-image distributions bit for bit.
struct JointDist {
    std::vector<double> p;  // 256*256, row-major (first image selects the row)
    ProbDist marginal_a;
    ProbDist marginal_b;

    /// Build from a raw 256x256 matrix (e.g. a product distribution).
    /// Validates non-negativity and unit mass; marginals are computed with
    /// compensated row/column sums.
    static JointDist from_matrix(std::vector<double> matrix);
};

Histogram256 grey_histogram(const ImageRgb8& image);
ProbDist to_distribution(const Histogram256& h);
JointDist joint_histogram(const ImageRgb8& a, const ImageRgb8& b);
std::pair<ProbDist, ProbDist> marginals(const JointDist& j);

}  // namespace entrex
