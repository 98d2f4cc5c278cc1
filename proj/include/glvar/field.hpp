#pragma once

#include "glvar/grid.hpp"

#include <complex>
#include <vector>

namespace glvar {

using cd = std::complex<double>;

// Order parameter psi: one complex value per grid node.
struct ComplexField {
    Grid2D grid;
    std::vector<cd> v;

    ComplexField() = default;
    explicit ComplexField(const Grid2D& g, cd fill = cd(0.0, 0.0))
        : grid(g), v(g.size(), fill) {}

    cd& at(int i, int j) { return v[grid.idx(i, j)]; }
    const cd& at(int i, int j) const { return v[grid.idx(i, j)]; }

    double max_abs() const;
    bool finite() const;
    ComplexField conjugated() const;
    // psi -> psi / max(1,|psi|) node-wise; never increases the energy.
    ComplexField truncated() const;
};

// Real scalar per node (stream functions, sampled profiles, phases).
struct RealField {
    Grid2D grid;
    std::vector<double> v;

    RealField() = default;
    explicit RealField(const Grid2D& g, double fill = 0.0)
        : grid(g), v(g.size(), fill) {}

    double& at(int i, int j) { return v[grid.idx(i, j)]; }
    const double& at(int i, int j) const { return v[grid.idx(i, j)]; }
};

struct Params {
    double kappa = 1.0;
    double H = 1.0;
    double b = 0.0;   // reduced field in a reference cell
    int sigma = +1;

    Params() = default;
    Params(double kappa_, double H_) : kappa(kappa_), H(H_) { check(); }
    void check() const {
        if (!(kappa > 0.0) || !(H > 0.0))
            throw std::invalid_argument("Params: kappa, H must be positive");
        if (sigma != 1 && sigma != -1)
            throw std::invalid_argument("Params: sigma must be +1 or -1");
    }
    double kH() const { return kappa * H; }
};

struct EnergyBreakdown {
    double kinetic = 0.0;
    double condensation = 0.0;
    double magnetic = 0.0;
    double total = 0.0;

    static EnergyBreakdown make(double kin, double cond, double mag) {
        EnergyBreakdown e;
        e.kinetic = kin;
        e.condensation = cond;
        e.magnetic = mag;
        e.total = kin + cond + mag;
        return e;
    }
};

} // namespace glvar
