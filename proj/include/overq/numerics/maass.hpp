#ifndef OVERQ_NUMERICS_MAASS_HPP
#define OVERQ_NUMERICS_MAASS_HPP

// The weight-1/2 objects: the period integral J(a/c;z), the completed
// M(a/c;z) = O - J, the theta-integral lemmas, the incomplete-Gamma Fourier
// expansion, the hyperbolic Laplacian by finite differences, and slash
// residuals. J's integrand is made computable through the Shimura inversion
// (itself an independently tested identity); the path substitution t = s^2
// removes the endpoint square-root singularity.
//
// Note on normalization: M = O - J matches the Fourier expansion (the
// non-holomorphic part equals -J exactly); the combination that is actually
// slash-invariant is O + J/pi, exposed as m_modular_eval. Delta_k kills O and
// J individually, so the Laplacian checks are normalization-independent.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>

#include "overq/numerics/transform.hpp"
#include "overq/overpartitions.hpp"

namespace overq {

/// J(a/c;z) = (pi i tan(pi a/c)/(4c)) int_{-zbar}^{i inf}
/// (-i tau)^{-3/2} Theta_{a,c}(-1/tau) / sqrt(-i(tau+z)) dtau.
inline Complex j_eval(std::int64_t a, std::int64_t c, Complex z, const EvalConfig& cfg = {}) {
    if (c == 2) throw BadParams("J(a/c;.) needs c != 2");
    if (!(z.imag() > 0)) throw ConvergenceDomain("J needs Im z > 0");
    double y = z.imag();
    double tol = cfg.quad_tol * 0.1;
    double factor = std::pow(4.0 * static_cast<double>(c), 1.5);
    auto integrand = [&](double s) -> Complex {
        Complex tau = -std::conj(z) + kI * s * s;
        Complex val = factor * shimura_theta_sum(a, c, tau, cfg);
        return val / std::sqrt(2.0 * y + s * s) * (2.0 * s) * kI;
    };
    // theta sums decay like e^{-2 pi (y + s^2)}
    double smax = std::sqrt(std::max(1.0, -std::log(tol * 1e-2) / (2.0 * kPi))) + 1.0;
    Complex integral = quad::integrate_panels(integrand, {0.0, 1.0, smax}, tol);
    return kPi * kI * std::tan(kPi * a / c) / (4.0 * static_cast<double>(c)) * integral;
}

/// M(a/c;z) = O(a/c;q) - J(a/c;z); the §5 Fourier-expansion normalization.
inline Complex m_eval(std::int64_t a, std::int64_t c, Complex z, const EvalConfig& cfg = {}) {
    return o_eval(a, c, z, cfg) - j_eval(a, c, z, cfg);
}

/// The slash-invariant completion O + J/pi (weight 1/2).
inline Complex m_modular_eval(std::int64_t a, std::int64_t c, Complex z, const EvalConfig& cfg = {}) {
    return o_eval(a, c, z, cfg) + j_eval(a, c, z, cfg) / kPi;
}

/// I_z from the Mordell side:
/// (4 sqrt2 sin^2(pi a/c)/(-iz)) int_R e^{-2 pi i x^2/z} H(2 pi i x/z + pi i/2) dx.
inline Complex iz_mordell(std::int64_t a, std::int64_t c, Complex z, const EvalConfig& cfg = {}) {
    double decay = 2.0 * kPi * (kI / z).real();
    if (!(decay > 0)) throw ConvergenceDomain("I_z needs Im z > 0");
    double tol = cfg.quad_tol * 0.1;
    double X = std::sqrt(-std::log(std::min(tol * 1e-2, 1e-12)) / decay) + 1.0;
    // c = 4a puts the H pole exactly at x = 0; fold as in the Mordell PV
    bool pole_at_origin = (c == 4 * a) || (3 * c == 4 * a);
    double sa = std::sin(kPi * a / c);
    Complex pref = 4.0 * std::sqrt(2.0) * sa * sa / (-kI * z);
    if (!pole_at_origin) {
        auto f = [&](double x) -> Complex {
            return std::exp(-2.0 * kPi * kI * x * x / z) *
                   H_ac(a, c, 2.0 * kPi * kI * x / z + kPi * kI / 2.0);
        };
        return pref * quad::integrate_panels(f, {-X, 0.0, X}, tol);
    }
    double phi = 2.0 * kPi * a / c;
    double s2 = 2.0 * sa * sa * 4.0 * std::cos(kPi * a / c) * std::cos(kPi * a / c);
    (void)s2;
    auto fold = [&](double x) -> Complex {
        Complex d = 2.0 * kPi * kI * x / z;
        return std::exp(-2.0 * kPi * kI * x * x / z) * std::cos(phi) /
               (2.0 * std::sin(phi) * std::sin(phi) + std::cosh(d) - 1.0);
    };
    return pref * quad::integrate_panels(fold, {0.0, 1.0, X}, tol);
}

/// I_z from the theta side: (tan(pi a/c)/(4c)) int_0^inf Theta_{a,c}(iu) /
/// sqrt(-i(iu+z)) du. (The printed lemma carries a spurious pi.)
inline Complex iz_theta(std::int64_t a, std::int64_t c, Complex z, const EvalConfig& cfg = {}) {
    double tol = cfg.quad_tol * 0.1;
    double umax = 16.0 * c * c * -std::log(tol * 1e-2) / (2.0 * kPi);
    auto f = [&](double u) -> Complex {
        if (u <= 0) return 0.0;
        return theta_ac_imag(a, c, u, cfg) / std::sqrt(-kI * (kI * u + z));
    };
    auto pts = quad::geometric_panels(0.5, 2.0, umax);
    return std::tan(kPi * a / c) / (4.0 * static_cast<double>(c)) *
           quad::integrate_panels(f, pts, tol);
}

/// J inversion residual:
/// (-iz)^{-1/2} J(a/c;-1/z) + pi I_z + (pi i tan(pi a/c)/(4c)) int Theta(tau)/sqrt(-i(tau+z)).
inline double j_lemma_residual(std::int64_t a, std::int64_t c, Complex z, const EvalConfig& cfg = {}) {
    double y = z.imag();
    double tol = cfg.quad_tol * 0.1;
    // Theta_{a,c}(tau) decays like e^{-2 pi Im(tau) n0^2/(16 c^2)}
    double n0 = 1.0;  // conservative minimal class element
    double smax = std::sqrt(16.0 * c * c * -std::log(tol * 1e-2) / (2.0 * kPi * n0 * n0)) + 1.0;
    auto f = [&](double s) -> Complex {
        Complex tau = -std::conj(z) + kI * s * s;
        return theta_ac_eval(a, c, tau, cfg) / std::sqrt(2.0 * y + s * s) * (2.0 * s) * kI;
    };
    auto pts = quad::geometric_panels(1.0, 1.8, smax);
    Complex theta_path = kPi * kI * std::tan(kPi * a / c) / (4.0 * static_cast<double>(c)) *
                         quad::integrate_panels(f, pts, tol);
    Complex lhs = j_eval(a, c, -1.0 / z, cfg) / std::sqrt(-kI * z);
    Complex rhs = -kPi * iz_mordell(a, c, z, cfg) - theta_path;
    return std::abs(lhs - rhs);
}

/// Theta-integral lemma residual |iz_mordell - iz_theta|.
inline double theta_lemma_residual(std::int64_t a, std::int64_t c, Complex z,
                                   const EvalConfig& cfg = {}) {
    return std::abs(iz_mordell(a, c, z, cfg) - iz_theta(a, c, z, cfg));
}

/// Incomplete Gamma(1/2; x) = sqrt(pi) erfc(sqrt x).
inline double incomplete_gamma_half(double x) {
    if (x < 0) throw BadParams("incomplete_gamma_half needs x >= 0");
    return std::sqrt(kPi) * std::erfc(std::sqrt(x));
}

/// Fourier expansion residual at z: |M - (1 + sum N(m,n) zeta_c^{am} q^n +
/// nonhol)| where nonhol = -sqrt(pi) i tan(pi a/c) sum_{k mod 2c} (-1)^k
/// e(2ka/c) sum_{m = k (2c), m != 0} sgn(m) Gamma(1/2; 4 pi m^2 y) q^{-m^2}.
inline double fourier_check(std::int64_t a, std::int64_t c, Complex z, const RankTable& table,
                            const EvalConfig& cfg = {}) {
    if (c % 2 == 0) throw BadParams("the Fourier expansion is implemented for odd c");
    double y = z.imag();
    Complex hol = 1.0;
    for (std::int64_t n = 1; n <= table.max_n(); ++n)
        for (std::int64_t m = -n; m <= n; ++m) {
            const Int& cnt = table.count(m, n);
            if (!is_zero(cnt))
                hol += static_cast<double>(cnt) * unit_phase(2 * a * m, c) * qpow(z, static_cast<double>(n));
        }
    // m-range: e^{-2 pi y m^2} tail below tol, capped against double overflow
    double tol = cfg.quad_tol * 1e-3;
    std::int64_t mmax = static_cast<std::int64_t>(std::sqrt(-std::log(tol) / (2.0 * kPi * y))) + 2;
    mmax = std::min<std::int64_t>(mmax, static_cast<std::int64_t>(std::sqrt(650.0 / (2.0 * kPi * y))));
    Complex nonhol = 0.0;
    for (std::int64_t k = 0; k < 2 * c; ++k) {
        Complex coef = unit_phase(4 * k * a, c);
        if (k % 2 == 1) coef = -coef;
        Complex inner = 0.0;
        for (std::int64_t m = -mmax; m <= mmax; ++m) {
            if (m == 0 || mod_floor(m - k, 2 * c) != 0) continue;
            double g = incomplete_gamma_half(4.0 * kPi * m * m * y);
            inner += (m > 0 ? 1.0 : -1.0) * g * qpow(z, -static_cast<double>(m) * m);
        }
        nonhol += coef * inner;
    }
    nonhol *= -std::sqrt(kPi) * kI * std::tan(kPi * a / c);
    Complex lhs = m_eval(a, c, z, cfg);
    return std::abs(lhs - (hol + nonhol));
}

using Evaluatable = std::function<Complex(Complex)>;

/// |Delta_k f(z)| by 4th-order central differences (5-point stencils).
inline double laplacian_residual(const Evaluatable& f, double weight, Complex z,
                                 const EvalConfig& cfg = {}) {
    double h = cfg.fd_step;
    double y = z.imag();
    auto fv = [&](double dx, double dy) { return f(z + Complex(dx, dy)); };
    Complex f0 = fv(0, 0);
    Complex fxx = (-fv(2 * h, 0) + 16.0 * fv(h, 0) - 30.0 * f0 + 16.0 * fv(-h, 0) - fv(-2 * h, 0)) / (12.0 * h * h);
    Complex fyy = (-fv(0, 2 * h) + 16.0 * fv(0, h) - 30.0 * f0 + 16.0 * fv(0, -h) - fv(0, -2 * h)) / (12.0 * h * h);
    Complex fx = (-fv(2 * h, 0) + 8.0 * fv(h, 0) - 8.0 * fv(-h, 0) + fv(-2 * h, 0)) / (12.0 * h);
    Complex fy = (-fv(0, 2 * h) + 8.0 * fv(0, h) - 8.0 * fv(0, -h) + fv(0, -2 * h)) / (12.0 * h);
    Complex lap = -y * y * (fxx + fyy) + kI * weight * y * (fx + kI * fy);
    return std::abs(lap);
}

/// Largest |f| over the stencil, the "local function scale" for tolerances.
inline double local_scale(const Evaluatable& f, Complex z, const EvalConfig& cfg = {}) {
    double h = cfg.fd_step;
    double m = 0.0;
    for (int dx = -2; dx <= 2; ++dx)
        for (int dy = -2; dy <= 2; ++dy)
            if (dx == 0 || dy == 0) m = std::max(m, std::abs(f(z + Complex(dx * h, dy * h))));
    return m;
}

struct SlashMatrix {
    std::int64_t alpha = 1, beta = 0, gamma = 0, delta = 1;

    void validate() const {
        if (alpha * delta - beta * gamma != 1) throw BadMatrix("determinant must be 1");
        if (mod_floor(delta, 2) == 0) throw BadMatrix("delta must be odd for the theta multiplier");
    }
    bool in_gamma0(std::int64_t N) const { return mod_floor(gamma, N) == 0; }
    bool in_gamma1(std::int64_t N) const {
        return in_gamma0(N) && mod_floor(alpha - 1, N) == 0 && mod_floor(delta - 1, N) == 0;
    }
    Complex apply(Complex z) const {
        return (static_cast<double>(alpha) * z + static_cast<double>(beta)) /
               (static_cast<double>(gamma) * z + static_cast<double>(delta));
    }
};

inline Complex epsilon_v(std::int64_t v) {
    if (mod_floor(v, 2) == 0) throw BadParams("epsilon_v needs odd v");
    return (mod_floor(v, 4) == 1) ? Complex(1.0, 0.0) : kI;
}

/// Residual of f(Az) = (gamma/delta)^{2k} eps_delta^{-2k} chi(delta)
/// (gamma z + delta)^k f(z) with the Kronecker-extended Jacobi symbol;
/// chi defaults to the trivial character.
inline double slash_residual(const Evaluatable& f, double weight, const SlashMatrix& A, Complex z,
                             Complex chi_delta = Complex(1.0, 0.0)) {
    A.validate();
    int twok = static_cast<int>(std::lround(2.0 * weight));
    Complex jac(static_cast<double>(kronecker(A.gamma, A.delta)), 0.0);
    Complex mult = std::pow(jac, twok) * std::pow(epsilon_v(A.delta), -twok) * chi_delta;
    Complex cz = static_cast<double>(A.gamma) * z + static_cast<double>(A.delta);
    Complex lhs = f(A.apply(z));
    Complex rhs = mult * std::pow(cz, weight) * f(z);
    return std::abs(lhs - rhs);
}

} // namespace overq

#endif
