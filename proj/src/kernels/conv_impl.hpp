#pragma once

#include <cstddef>

// Per-ISA entry points. Each set lives in its own translation unit so it can
// be compiled with the matching target flags; conv.cpp picks one at runtime.

namespace entrex::kernels::scalar {
void conv_line(const double* src, double* dst, std::size_t n, const double* k, std::size_t taps);
void scale_line(double* dst, const double* src, double c, std::size_t n);
void madd_line(double* dst, const double* src, double c, std::size_t n);
}  // namespace entrex::kernels::scalar

#if defined(ENTREX_HAVE_AVX2)
namespace entrex::kernels::avx2 {
void conv_line(const double* src, double* dst, std::size_t n, const double* k, std::size_t taps);
void scale_line(double* dst, const double* src, double c, std::size_t n);
void madd_line(double* dst, const double* src, double c, std::size_t n);
}  // namespace entrex::kernels::avx2
#endif

#if defined(ENTREX_HAVE_NEON)
namespace entrex::kernels::neon {
void conv_line(const double* src, double* dst, std::size_t n, const double* k, std::size_t taps);
void scale_line(double* dst, const double* src, double c, std::size_t n);
void madd_line(double* dst, const double* src, double c, std::size_t n);
}  // namespace entrex::kernels::neon
#endif
