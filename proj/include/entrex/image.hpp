#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace entrex {

/// 8-bit RGB image, row-major, tightly packed (3 bytes per pixel).
struct ImageRgb8 {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    ImageRgb8() = default;
    ImageRgb8(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h * 3, fill) {}

    bool valid() const {
        return width >= 1 && height >= 1 &&
               data.size() == static_cast<std::size_t>(width) * height * 3;
    }
    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }

    std::uint8_t& at(int x, int y, int c) {
        return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }
    std::uint8_t at(int x, int y, int c) const {
        return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }

    bool operator==(const ImageRgb8&) const = default;
};

/// Real-valued RGB working image for the log-domain pipeline.
/// Double precision: the filter output is compared against direct-convolution
/// references at 1e-6, which single precision cannot hold at tone scale.
struct ImageF64 {
    int width = 0;
    int height = 0;
    std::vector<double> data;

    ImageF64() = default;
    ImageF64(int w, int h)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h * 3, 0.0) {}
};

/// Single-channel real-valued plane.
struct Plane {
    int width = 0;
    int height = 0;
    std::vector<double> v;

    Plane() = default;
    Plane(int w, int h, double fill = 0.0)
        : width(w), height(h), v(static_cast<std::size_t>(w) * h, fill) {}

    double& at(int x, int y) { return v[static_cast<std::size_t>(y) * width + x]; }
    double at(int x, int y) const { return v[static_cast<std::size_t>(y) * width + x]; }
    double* row(int y) { return v.data() + static_cast<std::size_t>(y) * width; }
    const double* row(int y) const { return v.data() + static_cast<std::size_t>(y) * width; }
};

/// BT.601 luminance, rounded to nearest (ties away from zero), clamped to [0,255].
int grey_tone(std::uint8_t r, std::uint8_t g, std::uint8_t b);

}  // namespace entrex
