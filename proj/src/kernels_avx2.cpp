#include "glvar/kernels.hpp"

#ifdef GLVAR_BUILD_AVX2

#include <immintrin.h>
#include <algorithm>

// AVX2+FMA variants, two interleaved complex doubles per 256-bit vector.
// Compiled in its own TU with -mavx2 -mfma; only reached after the runtime
// cpuid check in kernels_dispatch.cpp.

namespace glvar::kernels {
namespace {

inline __m256d cmul(__m256d a, __m256d b) {
    // a*b for [re0 im0 re1 im1] layout
    __m256d are = _mm256_movedup_pd(a);               // [ar ar ar ar]
    __m256d aim = _mm256_permute_pd(a, 0xF);          // [ai ai ai ai]
    __m256d bsw = _mm256_permute_pd(b, 0x5);          // [bi br bi br]
    return _mm256_fmaddsub_pd(are, b, _mm256_mul_pd(aim, bsw));
}

inline __m256d cmul_conj_a(__m256d a, __m256d b) {
    // conj(a)*b
    __m256d are = _mm256_movedup_pd(a);
    __m256d aim = _mm256_permute_pd(a, 0xF);
    __m256d bsw = _mm256_permute_pd(b, 0x5);
    return _mm256_fmsubadd_pd(are, b, _mm256_mul_pd(aim, bsw));
}

void edge_diff_v(const double* U, const double* psip, const double* psi0,
                 double* d, std::size_t n) {
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        __m256d u = _mm256_loadu_pd(U + 2*k);
        __m256d p = _mm256_loadu_pd(psip + 2*k);
        __m256d q = _mm256_loadu_pd(psi0 + 2*k);
        _mm256_storeu_pd(d + 2*k, _mm256_sub_pd(cmul(u, p), q));
    }
    for (; k < n; ++k) {
        const double ur = U[2*k], ui = U[2*k+1];
        const double pr = psip[2*k], pi = psip[2*k+1];
        d[2*k]   = ur*pr - ui*pi - psi0[2*k];
        d[2*k+1] = ur*pi + ui*pr - psi0[2*k+1];
    }
}

double sum_abs2_v(const double* z, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    const std::size_t m = 2*n;
    for (; k + 4 <= m; k += 4) {
        __m256d v = _mm256_loadu_pd(z + k);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double buf[4];
    _mm256_storeu_pd(buf, acc);
    double s = (buf[0] + buf[2]) + (buf[1] + buf[3]);
    for (; k < m; ++k) s += z[k]*z[k];
    return s;
}

void acc_conj_scaled_v(double* g, const double* U, const double* z,
                       double c, std::size_t n) {
    __m256d cc = _mm256_set1_pd(c);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        __m256d u = _mm256_loadu_pd(U + 2*k);
        __m256d zz = _mm256_loadu_pd(z + 2*k);
        __m256d gv = _mm256_loadu_pd(g + 2*k);
        gv = _mm256_fmadd_pd(cc, cmul_conj_a(u, zz), gv);
        _mm256_storeu_pd(g + 2*k, gv);
    }
    for (; k < n; ++k) {
        const double ur = U[2*k], ui = U[2*k+1];
        const double zr = z[2*k], zi = z[2*k+1];
        g[2*k]   += c*(ur*zr + ui*zi);
        g[2*k+1] += c*(ur*zi - ui*zr);
    }
}

double cond_energy_grad_v(const double* psi, double* g, double gw, std::size_t n) {
    __m256d one = _mm256_set1_pd(1.0);
    __m256d half = _mm256_set1_pd(0.5);
    __m256d gwv = _mm256_set1_pd(gw);
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        __m256d p = _mm256_loadu_pd(psi + 2*k);
        __m256d sq = _mm256_mul_pd(p, p);
        __m256d a2 = _mm256_hadd_pd(sq, sq);          // |z|^2 duplicated per lane pair
        __m256d t = _mm256_sub_pd(one, a2);
        // each t appears twice; accumulate half*t*t
        acc = _mm256_fmadd_pd(half, _mm256_mul_pd(t, t), acc);
        if (g) {
            __m256d gv = _mm256_loadu_pd(g + 2*k);
            gv = _mm256_fmadd_pd(gwv, _mm256_mul_pd(t, p), gv);
            _mm256_storeu_pd(g + 2*k, gv);
        }
    }
    double buf[4];
    _mm256_storeu_pd(buf, acc);
    double e = (buf[0] + buf[2]) + (buf[1] + buf[3]);
    for (; k < n; ++k) {
        const double pr = psi[2*k], pi = psi[2*k+1];
        const double t = 1.0 - (pr*pr + pi*pi);
        e += t*t;
        if (g) {
            g[2*k]   += gw*t*pr;
            g[2*k+1] += gw*t*pi;
        }
    }
    return e;
}

double dot_v(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), acc);
    double buf[4];
    _mm256_storeu_pd(buf, acc);
    double s = (buf[0] + buf[2]) + (buf[1] + buf[3]);
    for (; k < n; ++k) s += a[k]*b[k];
    return s;
}

void axpy_v(double* y, const double* x, double a, std::size_t n) {
    __m256d av = _mm256_set1_pd(a);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d yv = _mm256_loadu_pd(y + k);
        yv = _mm256_fmadd_pd(av, _mm256_loadu_pd(x + k), yv);
        _mm256_storeu_pd(y + k, yv);
    }
    for (; k < n; ++k) y[k] += a*x[k];
}

double max_cabs2_v(const double* z, std::size_t n) {
    __m256d mx = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        __m256d v = _mm256_loadu_pd(z + 2*k);
        __m256d sq = _mm256_mul_pd(v, v);
        mx = _mm256_max_pd(mx, _mm256_hadd_pd(sq, sq));
    }
    double buf[4];
    _mm256_storeu_pd(buf, mx);
    double m = std::max(std::max(buf[0], buf[1]), std::max(buf[2], buf[3]));
    for (; k < n; ++k)
        m = std::max(m, z[2*k]*z[2*k] + z[2*k+1]*z[2*k+1]);
    return m;
}

} // namespace

const Ops& avx2_ops() {
    static const Ops t{edge_diff_v, sum_abs2_v, acc_conj_scaled_v,
                       cond_energy_grad_v, dot_v, axpy_v, max_cabs2_v,
                       "avx2"};
    return t;
}

} // namespace glvar::kernels

#endif // GLVAR_BUILD_AVX2
