#include "glvar/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace glvar::kernels {

bool avx2_available() {
#if defined(GLVAR_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Ops& ops() {
    static const Ops* selected = [] {
        const char* env = std::getenv("GLVAR_KERNELS");
        if (env && std::strcmp(env, "scalar") == 0) return &scalar_ops();
#ifdef GLVAR_BUILD_AVX2
        if (env && std::strcmp(env, "avx2") == 0 && avx2_available())
            return &avx2_ops();
        if (!env && avx2_available()) return &avx2_ops();
#endif
        return &scalar_ops();
    }();
    return *selected;
}

} // namespace glvar::kernels
