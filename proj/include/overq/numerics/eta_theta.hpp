#ifndef OVERQ_NUMERICS_ETA_THETA_HPP
#define OVERQ_NUMERICS_ETA_THETA_HPP

// Complex evaluation of Dedekind eta and the weight-3/2 theta functions
//   theta(alpha,beta;tau) = sum_{n = alpha mod beta} n e^{2 pi i tau n^2/(2 beta)}
// with the three-case packaging Theta_{a,c}. Branch convention everywhere:
// principal powers of (-i tau), which has positive real part on H.

#include <cmath>
#include <complex>
#include <cstdint>

#include "overq/eval_config.hpp"
#include "overq/numerics/dedekind.hpp"

namespace overq {

inline constexpr double kPi = 3.14159265358979323846;
inline const Complex kI{0.0, 1.0};

inline Complex qpow(Complex z, double e) { return std::exp(2.0 * kPi * kI * e * z); }

/// Dedekind eta on H. Reduces toward the fundamental domain first
/// (eta(z+1) = e^{i pi/12} eta(z), eta(-1/z) = sqrt(-iz) eta(z)), so small
/// Im z costs nothing; then the q-product.
inline Complex eta_eval(Complex z, const EvalConfig& cfg = {}) {
    if (!(z.imag() > 0)) throw ConvergenceDomain("eta needs Im z > 0");
    Complex mult = 1.0;
    for (int guard = 0; guard < 256; ++guard) {
        double n = std::floor(z.real() + 0.5);
        if (n != 0.0) {
            z -= n;
            mult *= std::exp(kI * kPi * n / 12.0);
        }
        if (z.imag() >= 0.5 || std::abs(z) >= 1.0) break;
        mult /= std::sqrt(-kI * z);
        z = -1.0 / z;
    }
    Complex q = std::exp(2.0 * kPi * kI * z);
    Complex prod = 1.0;
    double qa = std::abs(q);
    int nmax = std::max(8, static_cast<int>(40.0 / -std::log(qa)) + 2);
    nmax = std::min(nmax, 4 * cfg.series_trunc);
    Complex qn = q;
    for (int n = 1; n <= nmax; ++n) {
        prod *= (1.0 - qn);
        qn *= q;
    }
    return mult * std::exp(2.0 * kPi * kI * z / 24.0) * prod;
}

/// theta(alpha, beta; tau), truncated once the Gaussian tail is below tol.
inline Complex theta_eval(std::int64_t alpha, std::int64_t beta, Complex tau,
                          const EvalConfig& cfg = {}) {
    if (beta <= 0) throw BadParams("theta_eval needs beta > 0");
    double y = tau.imag();
    if (!(y > 0)) throw ConvergenceDomain("theta_eval needs Im tau > 0");
    double tol = cfg.quad_tol * 1e-3;
    // |n| e^{-pi y n^2/beta} < tol
    double bound = std::sqrt(std::max(1.0, -std::log(tol) * beta / (kPi * y))) + 2.0;
    std::int64_t jmax = static_cast<std::int64_t>(bound / beta) + 2;
    Complex s = 0.0;
    for (std::int64_t j = -jmax; j <= jmax; ++j) {
        double n = static_cast<double>(alpha + beta * j);
        s += n * std::exp(2.0 * kPi * kI * tau * n * n / (2.0 * static_cast<double>(beta)));
    }
    return s;
}

/// Theta_{a,c}(tau): the parity-cased packaging of theta.
inline Complex theta_ac_eval(std::int64_t a, std::int64_t c, Complex tau,
                             const EvalConfig& cfg = {}) {
    if (!(0 < a && a < c)) throw BadParams("theta_ac needs 0 < a < c");
    if (c % 2 == 1) return theta_eval(4 * a + c, 2 * c, tau / (4.0 * c), cfg);
    if (c % 4 == 2) return 2.0 * theta_eval(2 * a + c / 2, c, tau / (2.0 * c), cfg);
    return 4.0 * theta_eval(a + c / 4, c / 2, tau / static_cast<double>(c), cfg);
}

/// Right side of the Shimura inversion: -i (2c)^{-1/2} sum_{k mod 2c}
/// e(k(4a+c)/(2c)) theta(k, 2c; 4c tau). Equals (-i 4c tau)^{-3/2}
/// Theta_{a,c}(-1/tau); used both as a check and as the computable form of
/// the J integrand.
inline Complex shimura_theta_sum(std::int64_t a, std::int64_t c, Complex tau,
                                 const EvalConfig& cfg = {}) {
    Complex tot = 0.0;
    for (std::int64_t k = 0; k < 2 * c; ++k) {
        Complex phase = unit_phase(2 * k * (4 * a + c), 2 * c);  // e^{2 pi i k(4a+c)/(2c)}
        if (std::abs(phase) > 0.0)
            tot += phase * theta_eval(k, 2 * c, 4.0 * static_cast<double>(c) * tau, cfg);
    }
    return -kI / std::sqrt(2.0 * static_cast<double>(c)) * tot;
}

/// Theta_{a,c}(iu) for u > 0; small u is routed through the Shimura
/// inversion, whose theta sums converge like e^{-2 pi n^2/u}.
inline Complex theta_ac_imag(std::int64_t a, std::int64_t c, double u, const EvalConfig& cfg = {}) {
    if (!(u > 0)) throw ConvergenceDomain("theta_ac_imag needs u > 0");
    if (u >= 4.0 * c) return theta_ac_eval(a, c, Complex(0.0, u), cfg);
    // Theta_{a,c}(iu) = (4c/u)^{3/2} * shimura_theta_sum at tau = i/u * ... :
    // from (-i 4c tau)^{-3/2} Theta(-1/tau) = S(tau) with tau = i/u.
    Complex tau(0.0, 1.0 / u);
    double factor = std::pow(4.0 * static_cast<double>(c) / u, 1.5);
    return factor * shimura_theta_sum(a, c, tau, cfg);
}

/// |LHS - RHS| of the Shimura inversion at tau.
inline double shimura_residual(std::int64_t a, std::int64_t c, Complex tau,
                               const EvalConfig& cfg = {}) {
    Complex lhs = std::pow(-kI * 4.0 * static_cast<double>(c) * tau, -1.5) *
                  theta_ac_eval(a, c, -1.0 / tau, cfg);
    Complex rhs = shimura_theta_sum(a, c, tau, cfg);
    return std::abs(lhs - rhs);
}

} // namespace overq

#endif
