#pragma once

#include <complex>
#include <cstddef>

// Hot inner loops of the energy/gradient evaluation and the optimizer vector
// algebra. Complex arrays are interleaved (re,im) double pairs, so a
// std::complex<double>* can be passed via reinterpret_cast-free helpers below.
// A scalar reference implementation is always available; an AVX2+FMA variant
// is selected at runtime when the CPU supports it. The two are equivalence-
// tested in tests/test_kernels.cpp. Set GLVAR_KERNELS=scalar|avx2 to override.

namespace glvar::kernels {

struct Ops {
    // d[k] = U[k]*psip[k] - psi0[k]   (complex)
    void (*edge_diff)(const double* U, const double* psip, const double* psi0,
                      double* d, std::size_t n);
    // sum of |z[k]|^2 over n complex entries
    double (*sum_abs2)(const double* z, std::size_t n);
    // g[k] += c*conj(U[k])*z[k]       (complex, real scalar c)
    void (*acc_conj_scaled)(double* g, const double* U, const double* z,
                            double c, std::size_t n);
    // t = 1-|psi[k]|^2; returns sum of t^2; g[k] += gw*t*psi[k]
    double (*cond_energy_grad)(const double* psi, double* g, double gw,
                               std::size_t n);
    // plain real-vector ops (length n doubles)
    double (*dot)(const double* a, const double* b, std::size_t n);
    void (*axpy)(double* y, const double* x, double a, std::size_t n);
    // max over complex entries of |z[k]|^2
    double (*max_cabs2)(const double* z, std::size_t n);
    const char* name;
};

const Ops& scalar_ops();
#ifdef GLVAR_BUILD_AVX2
const Ops& avx2_ops();
#endif
bool avx2_available();

// Runtime-selected table (resolved once per process).
const Ops& ops();

using cd = std::complex<double>;

inline const double* pd(const cd* z) { return reinterpret_cast<const double*>(z); }
inline double* pd(cd* z) { return reinterpret_cast<double*>(z); }

inline void edge_diff(const cd* U, const cd* psip, const cd* psi0, cd* d, std::size_t n) {
    ops().edge_diff(pd(U), pd(psip), pd(psi0), pd(d), n);
}
inline double sum_abs2(const cd* z, std::size_t n) { return ops().sum_abs2(pd(z), n); }
inline void acc_conj_scaled(cd* g, const cd* U, const cd* z, double c, std::size_t n) {
    ops().acc_conj_scaled(pd(g), pd(U), pd(z), c, n);
}
inline double cond_energy_grad(const cd* psi, cd* g, double gw, std::size_t n) {
    return ops().cond_energy_grad(pd(psi), pd(g), gw, n);
}
inline double dot(const double* a, const double* b, std::size_t n) { return ops().dot(a, b, n); }
inline void axpy(double* y, const double* x, double a, std::size_t n) { ops().axpy(y, x, a, n); }
inline double max_cabs2(const cd* z, std::size_t n) { return ops().max_cabs2(pd(z), n); }

// g[k] += c*z[k] on complex arrays is axpy on 2n doubles.
inline void acc_scaled(cd* g, const cd* z, double c, std::size_t n) {
    ops().axpy(pd(g), pd(z), c, 2 * n);
}

} // namespace glvar::kernels
