#if defined(ENTREX_HAVE_AVX2)

#include <immintrin.h>

#include "conv_impl.hpp"

// 4-wide double lanes. Accumulation stays in tap order with explicit
// mul+add (no FMA) so every lane follows the scalar rounding sequence.

namespace entrex::kernels::avx2 {

void conv_line(const double* src, double* dst, std::size_t n, const double* k,
               std::size_t taps) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t t = 0; t < taps; ++t) {
            const __m256d v = _mm256_loadu_pd(src + i + t);
            acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_set1_pd(k[t]), v));
        }
        _mm256_storeu_pd(dst + i, acc);
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
    const __m256d vc = _mm256_set1_pd(c);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(dst + i, _mm256_mul_pd(vc, _mm256_loadu_pd(src + i)));
    }
    for (; i < n; ++i) {
        dst[i] = c * src[i];
    }
}

void madd_line(double* dst, const double* src, double c, std::size_t n) {
    const __m256d vc = _mm256_set1_pd(c);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d acc = _mm256_loadu_pd(dst + i);
        _mm256_storeu_pd(
            dst + i, _mm256_add_pd(acc, _mm256_mul_pd(vc, _mm256_loadu_pd(src + i))));
    }
    for (; i < n; ++i) {
        dst[i] += c * src[i];
    }
}

}  // namespace entrex::kernels::avx2

#endif  // ENTREX_HAVE_AVX2
