#pragma once

#include <cstddef>
#include <vector>

namespace entrex::kernels {

// Double-precision line primitives behind the separable convolution. Every
// variant accumulates each output element in the same tap order as the scalar
// reference and uses plain mul+add (no FMA), so results are bit-identical
// across variants; the equivalence tests assert exactly that.
struct ConvOps {
    const char* name;
    // dst[i] = sum_t k[t] * src[i + t], i in [0, n); src holds n + taps - 1 values.
    void (*conv_line)(const double* src, double* dst, std::size_t n,
                      const double* k, std::size_t taps);
    // dst[i] = c * src[i]
    void (*scale_line)(double* dst, const double* src, double c, std::size_t n);
    // dst[i] += c * src[i]
    void (*madd_line)(double* dst, const double* src, double c, std::size_t n);
};

/// Portable reference implementation.
const ConvOps& scalar_ops();

/// Every variant usable on this CPU, scalar first.
const std::vector<const ConvOps*>& available_ops();

/// The variant the library dispatches to (the last of available_ops()).
const ConvOps& active_ops();

}  // namespace entrex::kernels
