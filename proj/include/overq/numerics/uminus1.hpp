#ifndef OVERQ_NUMERICS_UMINUS1_HPP
#define OVERQ_NUMERICS_UMINUS1_HPP

// The u = -1 (weight 3/2) family: O(-1;q) and its simple-pole regularization
// O_r(q), the companions U_r, U, the I^{+-} integrals, the theta-integral
// I(tau), and the period integral I(-1;z) completing M(-1;z). The r-range
// guard |r| <= 1/(8k) keeps all Lambert denominators away from zero; the
// evaluators additionally check every denominator at runtime.

#include <cmath>
#include <complex>
#include <cstdint>

#include "overq/numerics/maass.hpp"

namespace overq {

/// O(-1;q) = 4 (eta(2z)/eta^2(z)) sum_{n in Z} (-1)^n q^{n^2+n}/(1+q^n)^2.
inline Complex o_minus1_eval(Complex z, const EvalConfig& cfg = {}) {
    detail::require_domain(z, cfg);
    int N = detail::term_bound(z, cfg);
    Complex s = 0.0;
    for (int n = -N; n <= N; ++n) {
        Complex qn = qpow(z, n);
        Complex den = (1.0 + qn) * (1.0 + qn);
        detail::check_denominator(den);
        Complex t = qpow(z, static_cast<double>(n) * n + n) / den;
        s += (n % 2 == 0) ? t : -t;
    }
    return 4.0 * pbar_eval(z, cfg) * s;
}

/// O_r(q) = 4 (eta(2z)/eta^2(z)) sum_{n in Z} (-1)^{n+1} q^{n^2}/(1+e^{2 pi i r} q^n).
inline Complex o_r_eval(Complex r, Complex z, const EvalConfig& cfg = {}) {
    detail::require_domain(z, cfg);
    int N = detail::term_bound(z, cfg);
    Complex er = std::exp(2.0 * kPi * kI * r);
    Complex s = 0.0;
    for (int n = -N; n <= N; ++n) {
        Complex den = 1.0 + er * qpow(z, n);
        detail::check_denominator(den);
        Complex t = qpow(z, static_cast<double>(n) * n) / den;
        s += (n % 2 == 0) ? -t : t;
    }
    return 4.0 * pbar_eval(z, cfg) * s;
}

/// U_r at q = e^{2 pi i z}: e^{pi i r} (eta(z)/eta^2(2z)) sum_{m odd}
/// q^{(m^2+m)/2} / (1 - e^{2 pi i r} q^m).
inline Complex u_r_eval(Complex r, Complex z, const EvalConfig& cfg = {}) {
    detail::require_domain(z, cfg);
    int N = 2 * detail::term_bound(0.5 * z, cfg) + 1;
    Complex er = std::exp(2.0 * kPi * kI * r);
    Complex s = 0.0;
    for (int m = -N; m <= N; m += 2) {
        Complex den = 1.0 - er * qpow(z, m);
        detail::check_denominator(den);
        s += qpow(z, 0.5 * (static_cast<double>(m) * m + m)) / den;
    }
    Complex e2 = eta_eval(2.0 * z, cfg);
    return std::exp(kPi * kI * r) * eta_eval(z, cfg) / (e2 * e2) * s;
}

/// U(q) = 4 (eta(z)/eta^2(2z)) sum_{m odd} q^{(m^2+m)/2}/(1-q^m)^2,
/// the weight-3/2 companion appearing in the inversion of O(-1;.).
inline Complex u_w32_eval(Complex z, const EvalConfig& cfg = {}) {
    detail::require_domain(z, cfg);
    int N = 2 * detail::term_bound(0.5 * z, cfg) + 1;
    Complex s = 0.0;
    for (int m = -N; m <= N; m += 2) {
        Complex d = 1.0 - qpow(z, m);
        detail::check_denominator(d);
        s += qpow(z, 0.5 * (static_cast<double>(m) * m + m)) / (d * d);
    }
    Complex e2 = eta_eval(2.0 * z, cfg);
    return 4.0 * eta_eval(z, cfg) / (e2 * e2) * s;
}

/// I^{+-}_{k,nu,r}(w) = int e^{-2 pi w x^2/k} / (1 + e^{A - 2 pi w x/k}) dx,
/// A = +-2 pi i nu/k -+ pi i ktilde/(2k) + 2 pi i r.
inline Complex i_pm_eval(int sign, std::int64_t k, std::int64_t nu, Complex r, Complex w,
                         const EvalConfig& cfg = {}) {
    if (sign != 1 && sign != -1) throw BadParams("sign must be +-1");
    if (!(w.real() > 0)) throw BadParams("needs Re w > 0");
    double X = detail::mordell_cutoff(k, w, cfg);
    Complex A = static_cast<double>(sign) * 2.0 * kPi * kI * static_cast<double>(nu) / static_cast<double>(k) -
                static_cast<double>(sign) * kPi * kI * ktilde(k) / (2.0 * static_cast<double>(k)) +
                2.0 * kPi * kI * r;
    auto f = [&](double x) -> Complex {
        Complex den = 1.0 + std::exp(A - 2.0 * kPi * w * x / static_cast<double>(k));
        detail::check_denominator(den);
        return std::exp(-2.0 * kPi * w * x * x / static_cast<double>(k)) / den;
    };
    return quad::integrate_panels(f, {-X, 0.0, X}, cfg.quad_tol * 0.1);
}

/// The r-derivative kernel: int e^{-2 pi w x^2/k} E/(1+E)^2 dx with
/// E = e^{A - 2 pi w x/k}, A as above at r = 0. This is the kernel the
/// corrected inversion of O(-1;.) needs; E(0) = -1 (k even, nu = k/2) makes
/// the integrand a non-integrable double pole and is rejected.
inline Complex i_pm2_eval(int sign, std::int64_t k, std::int64_t nu, Complex w,
                          const EvalConfig& cfg = {}) {
    if (sign != 1 && sign != -1) throw BadParams("sign must be +-1");
    if (!(w.real() > 0)) throw BadParams("needs Re w > 0");
    if (k % 2 == 0 && mod_floor(2 * nu, k) == 0 && mod_floor(2 * nu / k, 2) == 1)
        throw PoleHit("k even with nu = k/2: double pole on the contour");
    if (k % 2 == 0 && mod_floor(nu - k / 2, k) == 0)
        throw PoleHit("k even with nu = k/2: double pole on the contour");
    double X = detail::mordell_cutoff(k, w, cfg);
    Complex A = static_cast<double>(sign) * 2.0 * kPi * kI * static_cast<double>(nu) / static_cast<double>(k) -
                static_cast<double>(sign) * kPi * kI * ktilde(k) / (2.0 * static_cast<double>(k));
    auto f = [&](double x) -> Complex {
        Complex E = std::exp(A - 2.0 * kPi * w * x / static_cast<double>(k));
        Complex den = (1.0 + E) * (1.0 + E);
        detail::check_denominator(den);
        return std::exp(-2.0 * kPi * w * x * x / static_cast<double>(k)) * E / den;
    };
    return quad::integrate_panels(f, {-X, 0.0, X}, cfg.quad_tol * 0.1);
}

/// I(tau) = (1/2 pi i)[d/dr (I_r^+ + I_r^-)]_{r=0}, carried out analytically:
/// integrand e^{-2 pi i x^2/tau} (-iE/(1+iE)^2 + iE/(1-iE)^2), E = e^{-2 pi i x/tau}.
inline Complex i_tau_eval(Complex tau, const EvalConfig& cfg = {}) {
    double decay = 2.0 * kPi * (kI / tau).real();
    if (!(decay > 0)) throw ConvergenceDomain("I(tau) needs Im tau > 0");
    double tol = cfg.quad_tol * 0.1;
    double X = std::sqrt(-std::log(std::min(tol * 1e-2, 1e-12)) / decay) + 1.0;
    auto f = [&](double x) -> Complex {
        Complex E = std::exp(-2.0 * kPi * kI * x / tau);
        Complex p = 1.0 + kI * E, m = 1.0 - kI * E;
        return std::exp(-2.0 * kPi * kI * x * x / tau) * (-kI * E / (p * p) + kI * E / (m * m));
    };
    return quad::integrate_panels(f, {-X, 0.0, X}, tol);
}

/// int_0^inf eta^2(iu) / (eta(iu/2) (-i(iz+iu))^{3/2}) du; u = s^2 tames the
/// u^{-1/2} blowup of the eta ratio at 0, the tail decays like e^{-pi u/8}.
inline Complex eta_ratio_integral(Complex z, const EvalConfig& cfg = {}) {
    double tol = cfg.quad_tol * 0.1;
    double umax = 8.0 * -std::log(tol * 1e-2) / kPi + 4.0;
    auto f = [&](double s) -> Complex {
        if (s <= 0) return 0.0;
        double u = s * s;
        Complex e1 = eta_eval(Complex(0.0, u), cfg);
        Complex ratio = e1 * e1 / eta_eval(Complex(0.0, 0.5 * u), cfg);
        Complex den = std::pow(-kI * (kI * z + kI * u), 1.5);
        return ratio / den * (2.0 * s);
    };
    return quad::integrate_panels(f, {0.0, 1.0, std::sqrt(umax)}, tol);
}

/// I(-1;z) = (sqrt2/(pi i)) int_{-zbar}^{i inf} eta^2(tau)/(eta(2 tau)
/// (-i(tau+z))^{3/2}) dtau. The integrand tends to (2y+s)^{-3/2} (the eta
/// ratio is 1 + 2 sum (-1)^n q_tau^{n^2}), so the constant term is integrated
/// in closed form and only the exponentially small remainder is quadratured.
inline Complex i_minus1_eval(Complex z, const EvalConfig& cfg = {}) {
    if (!(z.imag() > 0)) throw ConvergenceDomain("I(-1;z) needs Im z > 0");
    double y = z.imag();
    double tol = cfg.quad_tol * 0.1;
    double smax = -std::log(tol * 1e-2) / (2.0 * kPi) + 2.0;
    auto f = [&](double s) -> Complex {
        Complex tau = -std::conj(z) + kI * s;
        Complex tail = 0.0;
        for (int n = 1; n <= 24; ++n) {
            Complex t = std::exp(2.0 * kPi * kI * tau * static_cast<double>(n) * n);
            tail += (n % 2 == 0) ? t : -t;
            if (std::abs(t) < 1e-18) break;
        }
        return 2.0 * tail / std::pow(2.0 * y + s, 1.5);
    };
    Complex base = 2.0 * kI / std::sqrt(2.0 * y);
    Complex rest = kI * quad::integrate_panels(f, {0.0, 1.0, smax}, tol);
    return std::sqrt(2.0) / (kPi * kI) * (base + rest);
}

/// M(-1;z) = O(-1;z) - I(-1;z); slash-invariant of weight 3/2 on Gamma_0(16)
/// as displayed (no renormalization needed in this family).
inline Complex m_minus1_eval(Complex z, const EvalConfig& cfg = {}) {
    return o_minus1_eval(z, cfg) - i_minus1_eval(z, cfg);
}

/// |(O_{r=eps} - O_{r=-eps})/(2 pi i 2 eps) - O(-1;q)|: second order in eps.
inline double derivative_relation_residual(Complex z, double eps, const EvalConfig& cfg = {}) {
    if (!(eps > 0 && eps <= 0.125)) throw BadParams("need 0 < eps <= 1/8");
    Complex diff = (o_r_eval(Complex(eps, 0.0), z, cfg) - o_r_eval(Complex(-eps, 0.0), z, cfg)) /
                   (2.0 * kPi * kI * 2.0 * eps);
    return std::abs(diff - o_minus1_eval(z, cfg));
}

/// Corollary "O(-1;-1/z)" inversion residual, with the corrected +1/sqrt2
/// U-term sign: O(-1;-1/z) = (1/sqrt2)(-iz)^{3/2} U(-1;z/2)
///   + 2 ((-iz)^{3/2}/pi) int_0^inf eta^2(iu)/(eta(iu/2)(-i(iz+iu))^{3/2}) du.
inline double corollary44_residual(Complex z, const EvalConfig& cfg = {}) {
    Complex lhs = o_minus1_eval(-1.0 / z, cfg);
    Complex pw = std::pow(-kI * z, 1.5);
    Complex rhs = pw / std::sqrt(2.0) * u_w32_eval(0.5 * z, cfg) +
                  2.0 * pw / kPi * eta_ratio_integral(z, cfg);
    return std::abs(lhs - rhs);
}

/// Theorem "O_r" transformation residual (exact as displayed, both parities).
/// k odd: O_r(q) = -2 sqrt2 i w^{-1/2} (w^2_{h,k}/w_{2h,k}) e^{pi i h'/(8k) +
/// 2 pi k r^2/w} U_{ir/w}(q_1^{1/2}) - 2 sqrt2 w^{1/2} (...)(1/k)
/// sum_{nu,+-} e^{(2 pi i h'/k)(-nu^2+nu/2)} I^{+-}_{k,nu,r}(w).
inline double theorem41_residual(std::int64_t h, std::int64_t k, double r, Complex w,
                                 const EvalConfig& cfg = {}) {
    if (!(std::abs(r) > 0 && std::abs(r) <= 1.0 / (8.0 * static_cast<double>(k))))
        throw BadParams("need 0 < |r| <= 1/(8k)");
    TransformCase tc(1, 3, h, k, w);  // reuse the (h,k,h',w) bookkeeping
    std::int64_t hp = tc.h_prime;
    Complex z = tc.z(), z1 = tc.z1();
    Complex lhs = o_r_eval(Complex(r, 0.0), z, cfg);
    Complex sqw = std::sqrt(w);
    Complex rr(r, 0.0);
    Complex rhs;
    if (k % 2 == 1) {
        Complex mult = omega_hk(h, k) * omega_hk(h, k) / omega_hk(2 * h, k);
        Complex gauss = std::exp(2.0 * kPi * static_cast<double>(k) * rr * rr / w);
        Complex t1 = -2.0 * std::sqrt(2.0) * kI / sqw * mult * unit_phase(hp, 8 * k) * gauss *
                     u_r_eval(kI * rr / w, 0.5 * z1, cfg);
        Complex isum = 0.0;
        for (std::int64_t nu = 0; nu < k; ++nu) {
            Complex ph = unit_phase(hp * (-2 * nu * nu + nu), k);  // e^{(2 pi i h'/k)(-nu^2+nu/2)}
            isum += ph * (i_pm_eval(+1, k, nu, rr, w, cfg) + i_pm_eval(-1, k, nu, rr, w, cfg));
        }
        Complex t2 = -2.0 * std::sqrt(2.0) * sqw * mult / static_cast<double>(k) * isum;
        rhs = t1 + t2;
    } else {
        Complex mult = omega_hk(h, k) * omega_hk(h, k) / omega_hk(h, k / 2);
        Complex gauss = std::exp(2.0 * kPi * static_cast<double>(k) * rr * rr / w);
        Complex t1 = -kI * mult / sqw * gauss * o_r_eval(rr / (kI * w), z1, cfg);
        Complex isum = 0.0;
        for (std::int64_t nu = 0; nu < k; ++nu) {
            Complex ph = unit_phase(-2 * hp * nu * nu, k);
            if (nu % 2 == 1) ph = -ph;
            isum += ph * i_pm_eval(+1, k, nu, rr, w, cfg);
        }
        Complex t2 = -4.0 * mult * sqw / static_cast<double>(k) * isum;
        rhs = t1 + t2;
    }
    return std::abs(lhs - rhs);
}

/// Corrected inversion of O(-1;q) for odd k:
/// O(-1;q) = +(1/sqrt2) w^{-3/2} mult e^{pi i h'/(8k)} U(q_1^{1/2})
///   + 2 sqrt2 w^{1/2} (mult/k) sum_{nu,+-} e^{(2 pi i h'/k)(-nu^2+nu/2)} Itilde^{+-}_{k,nu}(w).
inline double corollary42_residual(std::int64_t h, std::int64_t k, Complex w,
                                   const EvalConfig& cfg = {}) {
    if (k % 2 == 0) throw Unsupported("the nu = k/2 double pole leaves even k undefined here");
    TransformCase tc(1, 3, h, k, w);
    std::int64_t hp = tc.h_prime;
    Complex lhs = o_minus1_eval(tc.z(), cfg);
    Complex mult = omega_hk(h, k) * omega_hk(h, k) / omega_hk(2 * h, k);
    Complex t1 = std::pow(w, -1.5) / std::sqrt(2.0) * mult * unit_phase(hp, 8 * k) *
                 u_w32_eval(0.5 * tc.z1(), cfg);
    Complex isum = 0.0;
    for (std::int64_t nu = 0; nu < k; ++nu) {
        Complex ph = unit_phase(hp * (-2 * nu * nu + nu), k);
        isum += ph * (i_pm2_eval(+1, k, nu, w, cfg) + i_pm2_eval(-1, k, nu, w, cfg));
    }
    Complex t2 = 2.0 * std::sqrt(2.0) * std::sqrt(w) * mult / static_cast<double>(k) * isum;
    return std::abs(lhs - (t1 + t2));
}

/// Exact q-series side of sum_p (-1)^p q^{p^2} = eta^2(z)/eta(2z), evaluated
/// numerically (the exact-coefficient version lives in the series tests).
inline double sump_residual(Complex z, const EvalConfig& cfg = {}) {
    detail::require_domain(z, cfg);
    int N = detail::term_bound(z, cfg);
    Complex s = 0.0;
    for (int p = -N; p <= N; ++p) {
        Complex t = qpow(z, static_cast<double>(p) * p);
        s += (p % 2 == 0) ? t : -t;
    }
    Complex e1 = eta_eval(z, cfg);
    return std::abs(s - e1 * e1 / eta_eval(2.0 * z, cfg));
}

} // namespace overq

#endif
