#include "entrex/retinex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "entrex/detail/parallel.hpp"
#include "entrex/kernels/conv.hpp"

namespace entrex {

const char* to_string(RetinexLevel level) {
    switch (level) {
        case RetinexLevel::uniform: return "uniform";
        case RetinexLevel::low: return "low";
        case RetinexLevel::high: return "high";
    }
    return "?";
}

RetinexLevel level_from_string(std::string_view name) {
    if (name == "uniform") return RetinexLevel::uniform;
    if (name == "low") return RetinexLevel::low;
    if (name == "high") return RetinexLevel::high;
    throw std::invalid_argument("unknown retinex level '" + std::string(name) +
                                "' (expected uniform, low or high)");
}

void validate(const RetinexParams& params) {
    if (params.scale < 3) {
        throw std::invalid_argument("retinex: scale must be >= 3");
    }
    if (params.scale_division < 1 || params.scale_division > 8) {
        throw std::invalid_argument("retinex: scale division must lie in 1..8");
    }
    if (!(params.dynamic > 0.0)) {
        throw std::invalid_argument("retinex: dynamic must be > 0");
    }
}

std::vector<double> scale_distribution(RetinexLevel level, int scale, int n) {
    if (scale < 3 || n < 1 || n > 8) {
        throw std::invalid_argument("scale_distribution: need scale >= 3 and 1 <= n <= 8");
    }
    const double s = static_cast<double>(scale);
    if (n == 1) return {s / 2.0};
    if (n == 2) return {s / 2.0, s};

    std::vector<double> sigmas(n);
    switch (level) {
        case RetinexLevel::uniform: {
            const double step = s / static_cast<double>(n);
            for (int i = 0; i < n; ++i) sigmas[i] = 2.0 + i * step;
            break;
        }
        case RetinexLevel::low: {
            const double step = std::log(s - 2.0) / static_cast<double>(n);
            for (int i = 0; i < n; ++i) sigmas[i] = 2.0 + std::exp(i * step);
            break;
        }
        case RetinexLevel::high: {
            const double step = std::log(s - 2.0) / static_cast<double>(n);
            for (int i = 0; i < n; ++i) sigmas[i] = s - std::exp(i * step);
            break;
        }
    }
    // The uniform progression can overshoot the scale when n is large
    // relative to it; every surround stays within [2, scale].
    for (double& sigma : sigmas) sigma = std::clamp(sigma, 2.0, s);
    return sigmas;
}

std::vector<double> gaussian_kernel(double sigma) {
    if (!(sigma >= 0.5)) {
        throw std::invalid_argument("gaussian_kernel: sigma must be >= 0.5");
    }
    const int radius = static_cast<int>(std::ceil(3.0 * sigma));
    std::vector<double> k(2 * radius + 1);
    const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
    double sum = 0.0;
    for (int j = -radius; j <= radius; ++j) {
        const double w = std::exp(-static_cast<double>(j) * j * inv2s2);
        k[j + radius] = w;
        sum += w;
    }
    for (double& w : k) w /= sum;
    return k;
}

namespace {

void require_plane(const Plane& p, const char* what) {
    if (p.width < 1 || p.height < 1 ||
        p.v.size() != static_cast<std::size_t>(p.width) * p.height) {
        throw std::invalid_argument(std::string(what) + ": empty or inconsistent plane");
    }
}

}  // namespace

Plane gaussian_blur(const Plane& channel, double sigma) {
    require_plane(channel, "gaussian_blur");
    const std::vector<double> k = gaussian_kernel(sigma);
    const int radius = static_cast<int>(k.size() / 2);
    const std::size_t taps = k.size();
    const int w = channel.width;
    const int h = channel.height;
    const auto& ops = kernels::active_ops();

    // Horizontal pass over a clamp-padded copy of each row.
    Plane mid(w, h);
    detail::parallel_for(0, static_cast<std::size_t>(h), [&](std::size_t y) {
        std::vector<double> padded(static_cast<std::size_t>(w) + taps - 1);
        const double* src = channel.row(static_cast<int>(y));
        std::fill_n(padded.begin(), radius, src[0]);
        std::copy(src, src + w, padded.begin() + radius);
        std::fill_n(padded.begin() + radius + w, radius, src[w - 1]);
        ops.conv_line(padded.data(), mid.row(static_cast<int>(y)), w, k.data(), taps);
    });

    // Vertical pass. Taps clamping to the first or last row share that row,
    // so their weights collapse into one prefix/suffix coefficient.
    // TODO: the horizontal pass still walks every tap; collapse its boundary
    // region the same way to cut the cost of sigma much larger than width.
    std::vector<double> prefix(taps + 1, 0.0);
    for (std::size_t t = 0; t < taps; ++t) prefix[t + 1] = prefix[t] + k[t];
    std::vector<double> suffix(taps + 1, 0.0);
    for (std::size_t t = taps; t-- > 0;) suffix[t] = suffix[t + 1] + k[t];

    Plane out(w, h);
    detail::parallel_for(0, static_cast<std::size_t>(h), [&](std::size_t yy) {
        const int y = static_cast<int>(yy);
        const std::size_t clamped_lo =
            static_cast<std::size_t>(std::clamp(radius - y, 0, static_cast<int>(taps)));
        const std::size_t clamped_hi = static_cast<std::size_t>(
            std::clamp(radius - ((h - 1) - y), 0, static_cast<int>(taps)));
        const std::size_t interior_end = taps - clamped_hi;

        double* dst = out.row(y);
        bool seeded = false;
        if (clamped_lo > 0) {
            ops.scale_line(dst, mid.row(0), prefix[clamped_lo], w);
            seeded = true;
        }
        for (std::size_t t = clamped_lo; t < interior_end; ++t) {
            const double* src = mid.row(y + static_cast<int>(t) - radius);
            if (seeded) {
                ops.madd_line(dst, src, k[t], w);
            } else {
                ops.scale_line(dst, src, k[t], w);
                seeded = true;
            }
        }
        if (clamped_hi > 0) {
            ops.madd_line(dst, mid.row(h - 1), suffix[interior_end], w);
        }
    });
    return out;
}

Plane single_scale_retinex(const Plane& channel, double sigma) {
    require_plane(channel, "single_scale_retinex");
    const Plane blurred = gaussian_blur(channel, sigma);
    Plane out(channel.width, channel.height);
    for (std::size_t i = 0; i < out.v.size(); ++i) {
        out.v[i] = std::log(channel.v[i] + 1.0) - std::log(blurred.v[i] + 1.0);
    }
    return out;
}

ImageRgb8 dynamic_stretch(const ImageF64& working, double dynamic) {
    if (!(dynamic > 0.0)) {
        throw std::invalid_argument("dynamic_stretch: dynamic must be > 0");
    }
    const std::size_t n = working.data.size();
    if (n == 0 || working.width < 1 || working.height < 1) {
        throw std::invalid_argument("dynamic_stretch: empty working image");
    }

    // Pooled statistics over all three channels keep the channel balance.
    double mean = 0.0;
    for (double v : working.data) mean += v;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double v : working.data) var += (v - mean) * (v - mean);
    var /= static_cast<double>(n);
    const double sd = std::sqrt(var);

    ImageRgb8 out(working.width, working.height);
    if (sd < 1e-9) {
        std::fill(out.data.begin(), out.data.end(), std::uint8_t{128});
        return out;
    }

    const double lo = mean - dynamic * sd;
    const double hi = mean + dynamic * sd;
    const double gain = 255.0 / (hi - lo);
    for (std::size_t i = 0; i < n; ++i) {
        const double mapped = (working.data[i] - lo) * gain;
        const long q = std::lround(std::clamp(mapped, 0.0, 255.0));
        out.data[i] = static_cast<std::uint8_t>(q);
    }
    return out;
}

ImageRgb8 msrcr(const ImageRgb8& image, const RetinexParams& params) {
    if (!image.valid()) {
        throw std::invalid_argument("msrcr: image is empty or inconsistent");
    }
    validate(params);

    const std::vector<double> sigmas =
        scale_distribution(params.level, params.scale, params.scale_division);
    const int w = image.width;
    const int h = image.height;
    const std::size_t pixels = image.pixel_count();
    const double inv_scales = 1.0 / static_cast<double>(sigmas.size());

    // Per channel: mean of the single-scale log-ratios over all surrounds.
    std::vector<Plane> retinex(3);
    for (int c = 0; c < 3; ++c) {
        Plane chan(w, h);
        for (std::size_t i = 0; i < pixels; ++i) {
            chan.v[i] = static_cast<double>(image.data[i * 3 + c]);
        }
        Plane log_chan(w, h);
        for (std::size_t i = 0; i < pixels; ++i) {
            log_chan.v[i] = std::log(chan.v[i] + 1.0);
        }
        Plane acc(w, h, 0.0);
        for (double sigma : sigmas) {
            const Plane blurred = gaussian_blur(chan, sigma);
            for (std::size_t i = 0; i < pixels; ++i) {
                acc.v[i] += log_chan.v[i] - std::log(blurred.v[i] + 1.0);
            }
        }
        for (std::size_t i = 0; i < pixels; ++i) acc.v[i] *= inv_scales;
        retinex[c] = std::move(acc);
    }

    // Colour restoration around the tone sum, then stretch to 8 bits.
    constexpr double kAlpha = 128.0;
    ImageF64 working(w, h);
    for (std::size_t i = 0; i < pixels; ++i) {
        const double r = image.data[i * 3 + 0];
        const double g = image.data[i * 3 + 1];
        const double b = image.data[i * 3 + 2];
        const double log_sum = std::log(r + g + b + 3.0);
        working.data[i * 3 + 0] = retinex[0].v[i] * (std::log(kAlpha * r + 1.0) - log_sum);
        working.data[i * 3 + 1] = retinex[1].v[i] * (std::log(kAlpha * g + 1.0) - log_sum);
        working.data[i * 3 + 2] = retinex[2].v[i] * (std::log(kAlpha * b + 1.0) - log_sum);
    }
    return dynamic_stretch(working, params.dynamic);
}

}  // namespace entrex
