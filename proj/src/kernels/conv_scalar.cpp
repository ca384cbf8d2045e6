#include "conv_impl.hpp"

// Reference kernels. The tap loop runs in ascending order with separate
// mul and add (the build disables FP contraction), which fixes the exact
// sequence of roundings the SIMD variants reproduce lane by lane.

namespace entrex::kernels::scalar {

void conv_line(const double* src, double* dst, std::size_t n, const double* k,
               std::size_t taps) {
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t t = 0; t < taps; ++t) {
            acc += k[t] * src[i + t];
        }
        dst[i] = acc;
    }
}

void scale_line(double* dst, const double* src, double c, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] = c * src[i];
    }
}

void madd_line(double* dst, const double* src, double c, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] += c * src[i];
    }
}

}  // namespace entrex::kernels::scalar
