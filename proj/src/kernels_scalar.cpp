#include "glvar/kernels.hpp"

#include <algorithm>

namespace glvar::kernels {
namespace {

void edge_diff_s(const double* U, const double* psip, const double* psi0,
                 double* d, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        const double ur = U[2*k], ui = U[2*k+1];
        const double pr = psip[2*k], pi = psip[2*k+1];
        d[2*k]   = ur*pr - ui*pi - psi0[2*k];
        d[2*k+1] = ur*pi + ui*pr - psi0[2*k+1];
    }
}

double sum_abs2_s(const double* z, std::size_t n) {
    double s = 0.0;
    for (std::size_t k = 0; k < 2*n; ++k) s += z[k]*z[k];
    return s;
}

void acc_conj_scaled_s(double* g, const double* U, const double* z,
                       double c, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        const double ur = U[2*k], ui = U[2*k+1];
        const double zr = z[2*k], zi = z[2*k+1];
        g[2*k]   += c*(ur*zr + ui*zi);
        g[2*k+1] += c*(ur*zi - ui*zr);
    }
}

double cond_energy_grad_s(const double* psi, double* g, double gw, std::size_t n) {
    double e = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
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

double dot_s(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += a[k]*b[k];
    return s;
}

void axpy_s(double* y, const double* x, double a, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) y[k] += a*x[k];
}

double max_cabs2_s(const double* z, std::size_t n) {
    double m = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        m = std::max(m, z[2*k]*z[2*k] + z[2*k+1]*z[2*k+1]);
    return m;
}

} // namespace

const Ops& scalar_ops() {
    static const Ops t{edge_diff_s, sum_abs2_s, acc_conj_scaled_s,
                       cond_energy_grad_s, dot_s, axpy_s, max_cabs2_s,
                       "scalar"};
    return t;
}

} // namespace glvar::kernels
