#pragma once

#include <string_view>
#include <vector>

#include "entrex/image.hpp"

namespace entrex {

/// Filtering mode controlling how the surround scales are distributed:
/// uniform treats all intensities alike, low favours dark areas (small
/// surrounds), high favours bright areas (large surrounds).
enum class RetinexLevel { uniform, low, high };

const char* to_string(RetinexLevel level);
RetinexLevel level_from_string(std::string_view name);

struct RetinexParams {
    RetinexLevel level = RetinexLevel::uniform;
    int scale = 240;          // maximum surround depth, >= 3
    int scale_division = 3;   // number of scales N, 1..8
    double dynamic = 1.2;     // output stretch width in standard deviations, > 0

    bool operator==(const RetinexParams&) const = default;
};

/// Throws std::invalid_argument if any field is out of range.
void validate(const RetinexParams& params);

/// Surround widths sigma_0..sigma_{n-1} for the given level, each in [2, scale].
/// n = 1 gives [scale/2], n = 2 gives [scale/2, scale].
std::vector<double> scale_distribution(RetinexLevel level, int scale, int n);

/// 1-D Gaussian taps of standard deviation sigma, truncated at radius
/// ceil(3 sigma) and normalized to sum 1. Odd length 2r+1.
std::vector<double> gaussian_kernel(double sigma);

/// Separable Gaussian blur with clamp-to-edge borders. Requires sigma >= 0.5.
Plane gaussian_blur(const Plane& channel, double sigma);

/// ln(channel + 1) - ln(blur(channel) + 1); finite for channels in [0, 255].
Plane single_scale_retinex(const Plane& channel, double sigma);

/// Linear stretch of the working image around its pooled mean: values in
/// [mean - D s, mean + D s] map onto [0, 255]. A near-constant input
/// (s < 1e-9) produces mid-grey 128 everywhere.
ImageRgb8 dynamic_stretch(const ImageF64& working, double dynamic);

/// Multi-scale retinex with colour restoration. Per channel, the mean of the
/// single-scale log-ratios over the level's surrounds, multiplied by the
/// colour restoration factor ln(128 I_c + 1) - ln(I_R + I_G + I_B + 3), then
/// stretched to 8 bits with the dynamic slider.
ImageRgb8 msrcr(const ImageRgb8& image, const RetinexParams& params);

}  // namespace entrex
