#ifndef OVERQ_NUMERICS_QUADRATURE_HPP
#define OVERQ_NUMERICS_QUADRATURE_HPP

// Thin complex-valued wrappers over adaptive Gauss-Kronrod panels. Callers
// choose breakpoints; slowly decaying tails get geometric panel spacing.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "overq/errors.hpp"

namespace overq {

using Complex = std::complex<double>;

namespace quad {

inline Complex integrate(const std::function<Complex(double)>& f, double a, double b,
                         double tol, double* err_out = nullptr) {
    using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
    double err = 0.0;
    Complex v = GK::integrate(f, a, b, 12, tol, &err);
    if (err_out) *err_out = err;
    if (!(std::isfinite(v.real()) && std::isfinite(v.imag())))
        throw QuadratureFailure("non-finite quadrature result");
    return v;
}

/// Integrate over consecutive panels [pts[0], pts[1]], ... with a shared
/// absolute tolerance; throws QuadratureFailure when the summed error
/// estimate exceeds 50x the request (the estimates are conservative).
inline Complex integrate_panels(const std::function<Complex(double)>& f,
                                const std::vector<double>& pts, double tol) {
    Complex total = 0.0;
    double err_total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double err = 0.0;
        total += integrate(f, pts[i], pts[i + 1], tol, &err);
        err_total += err;
    }
    if (err_total > 50.0 * tol && err_total > 1e-6)
        throw QuadratureFailure("quadrature tolerance not met");
    return total;
}

/// Geometric breakpoints 0, first, first*ratio, ... covering [0, upto].
inline std::vector<double> geometric_panels(double first, double ratio, double upto) {
    std::vector<double> pts{0.0, first};
    while (pts.back() < upto) pts.push_back(pts.back() * ratio);
    return pts;
}

} // namespace quad
} // namespace overq

#endif
