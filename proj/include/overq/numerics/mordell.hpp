#ifndef OVERQ_NUMERICS_MORDELL_HPP
#define OVERQ_NUMERICS_MORDELL_HPP

// Mordell-type integrals
//   I_{a,c,k,nu}(w) = int_R e^{-2 pi w x^2/k}
//                     H_{a,c}(2 pi i nu/k - 2 pi w x/k - ktilde pi i/(2k)) dx.
// A pole of H can sit on the contour only at x = 0 (the imaginary part of the
// H-argument is constant in x up to the w-direction, and the rational
// condition below pins it); the integral is then a Cauchy principal value.
// The symmetric fold has an exact closed form,
//   H(u0 + d) + H(u0 - d) = cos(phi) / (2 sin^2(phi) + cosh(d) - 1),
// phi = 2 pi a/c, which removes the pole algebraically, so the PV needs no
// excision at all. An explicit-excision variant is kept for the stability
// property test.

#include <cmath>
#include <complex>
#include <cstdint>

#include "overq/numerics/lambert.hpp"
#include "overq/numerics/quadrature.hpp"

namespace overq {

inline int ktilde(std::int64_t k) { return (k % 2 == 0) ? 0 : 1; }

/// +1 / -1 if the integrand has its x = 0 pole from the e^{+-2 pi i a/c}
/// family, 0 if the contour is pole-free. Exact integer arithmetic:
/// nu/k - ktilde/(4k) = +-a/c (mod 1)  <=>  c(4 nu - ktilde) -+ 4ka = 0 (mod 4kc).
inline int mordell_pole_family(std::int64_t a, std::int64_t c, std::int64_t k, std::int64_t nu) {
    std::int64_t kt = ktilde(k);
    std::int64_t lhs = c * (4 * nu - kt);
    if (mod_floor(lhs - 4 * k * a, 4 * k * c) == 0) return +1;
    if (mod_floor(lhs + 4 * k * a, 4 * k * c) == 0) return -1;
    return 0;
}

namespace detail {

inline double mordell_cutoff(std::int64_t k, Complex w, const EvalConfig& cfg) {
    if (cfg.quad_cutoff > 0) return cfg.quad_cutoff;
    double tol = std::min(cfg.quad_tol * 1e-2, 1e-12);
    return std::sqrt(static_cast<double>(k) * -std::log(tol) / (2.0 * kPi * w.real())) + 1.0;
}

} // namespace detail

inline Complex mordell_integral(std::int64_t a, std::int64_t c, std::int64_t k, std::int64_t nu,
                                Complex w, const EvalConfig& cfg = {}) {
    if (!(w.real() > 0)) throw BadParams("Mordell integral needs Re w > 0");
    if (k < 1 || !(0 < a && a < c)) throw BadParams("Mordell integral needs k >= 1, 0 < a < c");
    const std::int64_t kt = ktilde(k);
    const double X = detail::mordell_cutoff(k, w, cfg);
    const double tol = cfg.quad_tol * 0.1;
    if (mordell_pole_family(a, c, k, nu) == 0) {
        auto f = [&](double x) -> Complex {
            Complex u = 2.0 * kPi * kI * static_cast<double>(nu) / static_cast<double>(k) -
                        2.0 * kPi * w * x / static_cast<double>(k) -
                        static_cast<double>(kt) * kPi * kI / (2.0 * static_cast<double>(k));
            return std::exp(-2.0 * kPi * w * x * x / static_cast<double>(k)) * H_ac(a, c, u);
        };
        return quad::integrate_panels(f, {-X, 0.0, X}, tol);
    }
    // principal value by the exact pair-sum
    double phi = 2.0 * kPi * a / c;
    double s2 = 2.0 * std::sin(phi) * std::sin(phi);
    auto fold = [&](double x) -> Complex {
        Complex d = 2.0 * kPi * w * x / static_cast<double>(k);
        return std::exp(-2.0 * kPi * w * x * x / static_cast<double>(k)) * std::cos(phi) /
               (s2 + std::cosh(d) - 1.0);
    };
    return quad::integrate_panels(fold, {0.0, 1.0, X}, tol);
}

/// Principal value by symmetric excision of radius rho plus the local
/// correction from the analytic (pole-subtracted) part; converges to
/// mordell_integral as rho -> 0 and is used by the stability test.
inline Complex mordell_integral_excision(std::int64_t a, std::int64_t c, std::int64_t k,
                                         std::int64_t nu, Complex w, double rho,
                                         const EvalConfig& cfg = {}) {
    if (mordell_pole_family(a, c, k, nu) == 0)
        throw BadParams("excision variant expects an on-contour pole");
    if (!(rho > 0)) throw BadParams("excision radius must be positive");
    const double X = detail::mordell_cutoff(k, w, cfg);
    double phi = 2.0 * kPi * a / c;
    double s2 = 2.0 * std::sin(phi) * std::sin(phi);
    auto fold = [&](double x) -> Complex {
        Complex d = 2.0 * kPi * w * x / static_cast<double>(k);
        return std::exp(-2.0 * kPi * w * x * x / static_cast<double>(k)) * std::cos(phi) /
               (s2 + std::cosh(d) - 1.0);
    };
    // int_{|x|>rho} f  =  int_rho^X fold ; over (-rho,rho) the 1/x Laurent
    // term integrates to zero and the analytic rest contributes ~ rho*fold(0).
    Complex outer = quad::integrate_panels(fold, {rho, std::max(1.0, 2 * rho), X}, cfg.quad_tol * 0.1);
    Complex local = rho * std::cos(phi) / s2;
    return outer + local;
}

} // namespace overq

#endif
