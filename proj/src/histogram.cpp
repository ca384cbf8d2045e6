#include "entrex/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>

#include "entrex/detail/accumulate.hpp"

namespace entrex {

int grey_tone(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    const double y = 0.299 * r + 0.587 * g + 0.114 * b;
    const long t = std::lround(y);
    return static_cast<int>(std::clamp(t, 0L, 255L));
}

namespace {

void require_valid(const ImageRgb8& image, const char* what) {
    if (!image.valid()) {
        throw std::invalid_argument(std::string(what) +
                                    ": image is empty or its buffer does not match width*height*3");
    }
}

}  // namespace

Histogram256 grey_histogram(const ImageRgb8& image) {
    require_valid(image, "grey_histogram");
    Histogram256 h;
    const std::uint8_t* px = image.data.data();
    const std::size_t n = image.pixel_count();
    for (std::size_t i = 0; i < n; ++i, px += 3) {
        ++h.counts[grey_tone(px[0], px[1], px[2])];
    }
    h.total = n;
    return h;
}

ProbDist to_distribution(const Histogram256& h) {
    if (h.total == 0) {
        throw std::invalid_argument("to_distribution: histogram has zero total");
    }
    ProbDist d;
    const double inv = static_cast<double>(h.total);
    for (int i = 0; i < 256; ++i) {
        d.p[i] = static_cast<double>(h.counts[i]) / inv;
    }
    return d;
}

JointDist joint_histogram(const ImageRgb8& a, const ImageRgb8& b) {
    require_valid(a, "joint_histogram");
    require_valid(b, "joint_histogram");
    if (a.width != b.width || a.height != b.height) {
        throw std::invalid_argument("joint_histogram: image dimensions differ");
    }

    std::vector<std::uint64_t> counts(256 * 256, 0);
    const std::uint8_t* pa = a.data.data();
    const std::uint8_t* pb = b.data.data();
    const std::size_t n = a.pixel_count();
    for (std::size_t i = 0; i < n; ++i, pa += 3, pb += 3) {
        const int s = grey_tone(pa[0], pa[1], pa[2]);
        const int t = grey_tone(pb[0], pb[1], pb[2]);
        ++counts[static_cast<std::size_t>(s) * 256 + t];
    }

    JointDist j;
    j.p.resize(256 * 256);
    const double total = static_cast<double>(n);
    for (std::size_t i = 0; i < counts.size(); ++i) {
        j.p[i] = static_cast<double>(counts[i]) / total;
    }
    // Marginals from the integer counts: identical to the single-image
    // distributions, not merely close.
    for (int s = 0; s < 256; ++s) {
        std::uint64_t row = 0, col = 0;
        for (int t = 0; t < 256; ++t) {
            row += counts[static_cast<std::size_t>(s) * 256 + t];
            col += counts[static_cast<std::size_t>(t) * 256 + s];
        }
        j.marginal_a.p[s] = static_cast<double>(row) / total;
        j.marginal_b.p[s] = static_cast<double>(col) / total;
    }
    return j;
}

JointDist JointDist::from_matrix(std::vector<double> matrix) {
    if (matrix.size() != 256 * 256) {
        throw std::invalid_argument("JointDist: matrix must be 256x256");
    }
    for (double x : matrix) {
        if (!(x >= 0.0) || !std::isfinite(x)) {
            throw std::invalid_argument("JointDist: entries must be finite and non-negative");
        }
    }
    if (std::abs(detail::compensated_sum(matrix) - 1.0) > 1e-12) {
        throw std::invalid_argument("JointDist: entries must sum to 1 within 1e-12");
    }

    JointDist j;
    j.p = std::move(matrix);
    for (int s = 0; s < 256; ++s) {
        detail::NeumaierSum row, col;
        for (int t = 0; t < 256; ++t) {
            row.add(j.p[static_cast<std::size_t>(s) * 256 + t]);
            col.add(j.p[static_cast<std::size_t>(t) * 256 + s]);
        }
        j.marginal_a.p[s] = row.value();
        j.marginal_b.p[s] = col.value();
    }
    return j;
}

std::pair<ProbDist, ProbDist> marginals(const JointDist& j) {
    return {j.marginal_a, j.marginal_b};
}

}  // namespace entrex
