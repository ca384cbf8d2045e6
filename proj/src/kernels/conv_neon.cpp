#if defined(ENTREX_HAVE_NEON)

#include <arm_neon.h>

#include "conv_impl.hpp"

// 2-wide float64x2 lanes. vmulq/vaddq are kept separate (vfmaq would fuse
// the rounding and diverge from the scalar reference).

namespace entrex::kernels::neon {

void conv_line(const double* src, double* dst, std::size_t n, const double* k,
               std::size_t taps) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t acc = vdupq_n_f64(0.0);
        for (std::size_t t = 0; t < taps; ++t) {
            const float64x2_t v = vld1q_f64(src + i + t);
            acc = vaddq_f64(acc, vmulq_f64(vdupq_n_f64(k[t]), v));
        }
        vst1q_f64(dst + i, acc);
    }
    for (; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t t = 0; t < taps; ++t) {
            acc += k[t] * src[i + t];
        }
        dst[i] = acc;
    }
}

void scale_line(double* dst, const double* src, double c, std::size_t n) {
    const float64x2_t vc = vdupq_n_f64(c);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(dst + i, vmulq_f64(vc, vld1q_f64(src + i)));
    }
    for (; i < n; ++i) {
        dst[i] = c * src[i];
    }
}

void madd_line(double* dst, const double* src, double c, std::size_t n) {
    const float64x2_t vc = vdupq_n_f64(c);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t acc = vld1q_f64(dst + i);
        vst1q_f64(dst + i, vaddq_f64(acc, vmulq_f64(vc, vld1q_f64(src + i))));
    }
    for (; i < n; ++i) {
        dst[i] += c * src[i];
    }
}

}  // namespace entrex::kernels::neon

#endif  // ENTREX_HAVE_NEON
