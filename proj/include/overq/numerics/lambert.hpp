#ifndef OVERQ_NUMERICS_LAMBERT_HPP
#define OVERQ_NUMERICS_LAMBERT_HPP

// Bilateral Lambert-series evaluators: the rank generating function
// O(a/c;q) and the auxiliary functions of the transformation law. Fractional
// q-powers are always exponentials of z (q^e := e^{2 pi i e z}), never complex
// powers of q, so branches are unambiguous.
//
// Conventions pinned against the exact rank tables and the residue sums:
//  - U(a,b,c): prefactor exponent s(b,c) b/c + b/(2c) - b^2/c^2.
//  - V(a,b,c): summand carries (1 + e q^{m+b/c})/(1 - e q^{m+b/c}).
//  - V(a/c;q): re-derived symmetric form
//      (eta(2z)/eta^2(z)) q^{1/4} sum (-1)^m q^{m^2+m} (1-q^{2m+1}) /
//                                     (1 - 2cos(2 pi a/c) q^{m+1/2} + q^{2m+1}).

#include <cmath>
#include <complex>
#include <cstdint>

#include "overq/numerics/eta_theta.hpp"

namespace overq {

/// H_{a,c}(x) = e^x / (1 - 2 cos(2 pi a/c) e^x + e^{2x}); even and 2 pi i
/// periodic. Throws PoleHit within tolerance of a zero denominator.
inline Complex H_ac(std::int64_t a, std::int64_t c, Complex x) {
    Complex ex = std::exp(x);
    Complex den = 1.0 - 2.0 * std::cos(2.0 * kPi * a / c) * ex + ex * ex;
    if (std::abs(den) < 1e-13 * std::max(1.0, std::norm(ex)))
        throw PoleHit("H_{a,c} evaluated at a pole");
    return ex / den;
}

namespace detail {

inline void require_domain(Complex z, const EvalConfig& cfg) {
    if (!(z.imag() >= cfg.y_min))
        throw ConvergenceDomain("evaluator needs Im z >= y_min (override via EvalConfig)");
}

inline int term_bound(Complex z, const EvalConfig& cfg) {
    // q^{n^2} decay: stop once 2 pi y n^2 > -log(tol)
    double y = z.imag();
    double tol = std::min(cfg.quad_tol * 1e-3, 1e-14);
    int n = static_cast<int>(std::sqrt(std::max(1.0, -std::log(tol) / (2.0 * kPi * y)))) + 3;
    return std::min(n, cfg.series_trunc);
}

inline void check_denominator(Complex den) {
    if (std::abs(den) < 1e-12) throw PoleHit("Lambert denominator vanishes near this z");
}

} // namespace detail

/// P(q) = eta(2z)/eta^2(z) numerically.
inline Complex pbar_eval(Complex z, const EvalConfig& cfg = {}) {
    Complex e1 = eta_eval(z, cfg);
    return eta_eval(2.0 * z, cfg) / (e1 * e1);
}

/// O(a/c;q) = 4 sin^2(pi a/c) (eta(2z)/eta^2(z)) sum_{n in Z} (-1)^n q^{n^2}
/// H_{a,c}(2 pi i n z). The (a,c) = (0,1) degenerate case returns P(q).
inline Complex o_eval(std::int64_t a, std::int64_t c, Complex z, const EvalConfig& cfg = {}) {
    detail::require_domain(z, cfg);
    if (mod_floor(a, c) == 0) return pbar_eval(z, cfg);
    int N = detail::term_bound(z, cfg);
    Complex s = 0.0;
    for (int n = -N; n <= N; ++n) {
        Complex t = qpow(z, static_cast<double>(n) * n) * H_ac(a, c, 2.0 * kPi * kI * static_cast<double>(n) * z);
        s += (n % 2 == 0) ? t : -t;
    }
    double sa = std::sin(kPi * a / c);
    return 4.0 * sa * sa * pbar_eval(z, cfg) * s;
}

/// The paper's one-sided display of O(u;q) (prefactor times 1 + 2 sum_{n>=1});
/// kept as an independent route for tests.
inline Complex o_eval_onesided(std::int64_t a, std::int64_t c, Complex z,
                               const EvalConfig& cfg = {}) {
    detail::require_domain(z, cfg);
    Complex u = unit_phase(2 * a, c);
    Complex s = 1.0;
    int N = detail::term_bound(z, cfg);
    for (int n = 1; n <= N; ++n) {
        Complex qn = qpow(z, n);
        Complex den = (1.0 - u * qn) * (1.0 - qn / u);
        detail::check_denominator(den);
        Complex t = (1.0 - u) * (1.0 - 1.0 / u) * qpow(z, static_cast<double>(n) * n + n) / den;
        s += 2.0 * ((n % 2 == 0) ? t : -t);
    }
    return pbar_eval(z, cfg) * s;
}

/// U(A/C;q) = sin(pi A/C) (eta(z/2)/eta^2(z)) sum_n (1+q^n) q^{n^2+n/2} /
/// (1 - 2 cos(2 pi A/C) q^n + q^{2n}). A may exceed C (A = a h').
inline Complex u2_eval(std::int64_t A, std::int64_t C, Complex z, const EvalConfig& cfg = {}) {
    detail::require_domain(z, cfg);
    int N = detail::term_bound(0.5 * z, cfg);
    double co = std::cos(2.0 * kPi * A / C);
    Complex s = 0.0;
    for (int n = -N; n <= N; ++n) {
        Complex qn = qpow(z, n);
        Complex den = 1.0 - 2.0 * co * qn + qn * qn;
        detail::check_denominator(den);
        s += (1.0 + qn) * qpow(z, static_cast<double>(n) * n + 0.5 * n) / den;
    }
    Complex e = eta_eval(z, cfg);
    return std::sin(kPi * A / C) * eta_eval(0.5 * z, cfg) / (e * e) * s;
}

inline int s_bc(std::int64_t b, std::int64_t c) {
    if (!(0 < b && b < c)) throw BadParams("s(b,c) needs 0 < b/c < 1");
    if (4 * b <= c) return 0;
    if (4 * b <= 3 * c) return 1;
    return 2;
}

inline int t_bc(std::int64_t b, std::int64_t c) {
    if (!(0 < b && b < c) || 2 * b == c) throw BadParams("t(b,c) needs b/c in (0,1), != 1/2");
    return (2 * b < c) ? 1 : 3;
}

/// U(A,b,c;q): prefactor (eta(z/2)/eta^2(z)) e^{pi i A(4b/c - 1 - 2s)/c}
/// q^{s b/c + b/(2c) - b^2/c^2}, summand q^{m(2m+1)/2 + ms}/(1 - e^{-2 pi i A/c} q^{m+b/c}).
inline Complex u3_eval(std::int64_t A, std::int64_t b, std::int64_t c, Complex z,
                       const EvalConfig& cfg = {}) {
    detail::require_domain(z, cfg);
    int s = s_bc(b, c);
    Complex eps = unit_phase(-2 * A, c);
    double lead = static_cast<double>(s) * b / c + 0.5 * b / c -
                  static_cast<double>(b) * b / (static_cast<double>(c) * c);
    Complex phase = unit_phase(A * (4 * b - c - 2 * s * c), c * c);  // e^{pi i A(4b/c-1-2s)/c}
    int N = detail::term_bound(0.5 * z, cfg);
    Complex acc = 0.0;
    for (int m = -N; m <= N; ++m) {
        Complex den = 1.0 - eps * qpow(z, m + static_cast<double>(b) / c);
        detail::check_denominator(den);
        acc += qpow(z, 0.5 * m * (2.0 * m + 1.0) + static_cast<double>(m) * s) / den;
    }
    Complex e = eta_eval(z, cfg);
    return eta_eval(0.5 * z, cfg) / (e * e) * phase * qpow(z, lead) * acc;
}

/// V(A,b,c;q): same prefactor family as U(A,b,c) with the extra
/// (1 + e^{-2 pi i A/c} q^{m+b/c}) numerator.
inline Complex v3_eval(std::int64_t A, std::int64_t b, std::int64_t c, Complex z,
                       const EvalConfig& cfg = {}) {
    detail::require_domain(z, cfg);
    int s = s_bc(b, c);
    Complex eps = unit_phase(-2 * A, c);
    double lead = static_cast<double>(s) * b / c + 0.5 * b / c -
                  static_cast<double>(b) * b / (static_cast<double>(c) * c);
    Complex phase = unit_phase(A * (4 * b - c - 2 * s * c), c * c);
    int N = detail::term_bound(0.5 * z, cfg);
    Complex acc = 0.0;
    for (int m = -N; m <= N; ++m) {
        Complex x = eps * qpow(z, m + static_cast<double>(b) / c);
        detail::check_denominator(1.0 - x);
        acc += qpow(z, 0.5 * m * (2.0 * m + 1.0) + static_cast<double>(m) * s) * (1.0 + x) / (1.0 - x);
    }
    Complex e = eta_eval(z, cfg);
    return eta_eval(0.5 * z, cfg) / (e * e) * phase * qpow(z, lead) * acc;
}

/// O(A,b,c;q): (eta(2z)/eta^2(z)) e^{pi i A(4b/c-1-t)/c} q^{t b/(2c) + b/(2c) - b^2/c^2}
/// sum (-1)^m q^{m(2m+1)/2 + m t/2}/(1 - e^{-2 pi i A/c} q^{m + b/c}).
inline Complex o3_eval(std::int64_t A, std::int64_t b, std::int64_t c, Complex z,
                       const EvalConfig& cfg = {}) {
    detail::require_domain(z, cfg);
    int t = t_bc(b, c);
    Complex eps = unit_phase(-2 * A, c);
    double lead = 0.5 * static_cast<double>(t) * b / c + 0.5 * b / c -
                  static_cast<double>(b) * b / (static_cast<double>(c) * c);
    Complex phase = unit_phase(A * (4 * b - c - t * c), c * c);
    int N = detail::term_bound(0.5 * z, cfg);
    Complex acc = 0.0;
    for (int m = -N; m <= N; ++m) {
        Complex den = 1.0 - eps * qpow(z, m + static_cast<double>(b) / c);
        detail::check_denominator(den);
        Complex t1 = qpow(z, 0.5 * m * (2.0 * m + 1.0) + 0.5 * t * m) / den;
        acc += (m % 2 == 0) ? t1 : -t1;
    }
    return pbar_eval(z, cfg) * phase * qpow(z, lead) * acc;
}

/// V(A/C;q), the c1 = 2 companion, in the re-derived symmetric form (the
/// printed one is a mis-resummation; see the repository tests).
inline Complex v2_eval(std::int64_t A, std::int64_t C, Complex z, const EvalConfig& cfg = {}) {
    detail::require_domain(z, cfg);
    double co = std::cos(2.0 * kPi * A / C);
    int N = detail::term_bound(0.5 * z, cfg);
    Complex acc = 0.0;
    for (int m = -N; m <= N; ++m) {
        Complex qh = qpow(z, m + 0.5);
        Complex den = 1.0 - 2.0 * co * qh + qpow(z, 2 * m + 1);
        detail::check_denominator(den);
        Complex t1 = qpow(z, static_cast<double>(m) * m + m) * (1.0 - qpow(z, 2 * m + 1)) / den;
        acc += (m % 2 == 0) ? t1 : -t1;
    }
    return pbar_eval(z, cfg) * qpow(z, 0.25) * acc;
}

} // namespace overq

#endif
