#include "entrex/kernels/conv.hpp"

#include "conv_impl.hpp"

namespace entrex::kernels {

namespace {

const ConvOps kScalarOps{"scalar", &scalar::conv_line, &scalar::scale_line,
                         &scalar::madd_line};

#if defined(ENTREX_HAVE_AVX2)
const ConvOps kAvx2Ops{"avx2", &avx2::conv_line, &avx2::scale_line, &avx2::madd_line};

bool cpu_has_avx2() { return __builtin_cpu_supports("avx2"); }
#endif

#if defined(ENTREX_HAVE_NEON)
// NEON is baseline on aarch64; no runtime probe needed.
const ConvOps kNeonOps{"neon", &neon::conv_line, &neon::scale_line, &neon::madd_line};
#endif

std::vector<const ConvOps*> detect() {
    std::vector<const ConvOps*> ops{&kScalarOps};
#if defined(ENTREX_HAVE_AVX2)
    if (cpu_has_avx2()) ops.push_back(&kAvx2Ops);
#endif
#if defined(ENTREX_HAVE_NEON)
    ops.push_back(&kNeonOps);
#endif
    return ops;
}

}  // namespace

const ConvOps& scalar_ops() { return kScalarOps; }

const std::vector<const ConvOps*>& available_ops() {
    static const std::vector<const ConvOps*> ops = detect();
    return ops;
}

const ConvOps& active_ops() { return *available_ops().back(); }

}  // namespace entrex::kernels
