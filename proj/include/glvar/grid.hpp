#pragma once

#include <cstddef>
#include <stdexcept>

namespace glvar {

// Uniform node grid on a rectangle. Node (i,j) sits at
// (x0 + i*h, y0 + j*h), i in [0,nx), j in [0,ny). Spacing is identical on
// both axes; the covariant stencil needs at least one interior node per
// direction, so nx,ny >= 3 is enforced at construction.
struct Grid2D {
    double x0 = 0.0, y0 = 0.0;
    int nx = 0, ny = 0;
    double h = 0.0;

    Grid2D() = default;
    Grid2D(double x0_, double y0_, int nx_, int ny_, double h_)
        : x0(x0_), y0(y0_), nx(nx_), ny(ny_), h(h_) {
        if (nx < 3 || ny < 3) throw std::invalid_argument("Grid2D: nx, ny must be >= 3");
        if (!(h > 0.0)) throw std::invalid_argument("Grid2D: spacing must be positive");
    }

    // Square domain [x0, x0+L]^2 with n nodes per side.
    static Grid2D square(double x0, double L, int n) {
        return Grid2D(x0, x0, n, n, L / (n - 1));
    }

    double Lx() const { return h * (nx - 1); }
    double Ly() const { return h * (ny - 1); }
    double x(int i) const { return x0 + h * i; }
    double y(int j) const { return y0 + h * j; }
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }
    std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }

    bool same_as(const Grid2D& o) const {
        return nx == o.nx && ny == o.ny && x0 == o.x0 && y0 == o.y0 && h == o.h;
    }
};

// Grid-aligned node sub-rectangle, inclusive corners.
struct Region {
    int i0 = 0, j0 = 0, i1 = 0, j1 = 0;

    static Region all(const Grid2D& g) { return {0, 0, g.nx - 1, g.ny - 1}; }

    void validate(const Grid2D& g) const {
        if (i0 < 0 || j0 < 0 || i1 >= g.nx || j1 >= g.ny || i0 >= i1 || j0 >= j1)
            throw std::invalid_argument("Region: outside grid or degenerate");
    }
    int nxr() const { return i1 - i0 + 1; }
    int nyr() const { return j1 - j0 + 1; }
};

// Resolution rule: h must resolve the magnetic length, h <= c_res/sqrt(kH*supB).
inline bool resolution_ok(const Grid2D& g, double kappa, double H, double sup_b0,
                          double c_res = 0.25) {
    const double s = kappa * H * sup_b0;
    if (s <= 0.0) return true;
    return g.h <= c_res / std::sqrt(s) * (1.0 + 1e-12);
}

} // namespace glvar
