#include "glvar/field.hpp"

#include <algorithm>
#include <cmath>

namespace glvar {

double ComplexField::max_abs() const {
    double m = 0.0;
    for (const cd& z : v) m = std::max(m, std::norm(z));
    return std::sqrt(m);
}

bool ComplexField::finite() const {
    for (const cd& z : v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

ComplexField ComplexField::conjugated() const {
    ComplexField out(grid);
    for (std::size_t k = 0; k < v.size(); ++k) out.v[k] = std::conj(v[k]);
    return out;
}

ComplexField ComplexField::truncated() const {
    ComplexField out(grid);
    for (std::size_t k = 0; k < v.size(); ++k) {
        const double a = std::abs(v[k]);
        out.v[k] = a > 1.0 ? v[k] / a : v[k];
    }
    return out;
}

} // namespace glvar
