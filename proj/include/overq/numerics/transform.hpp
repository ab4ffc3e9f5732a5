#ifndef OVERQ_NUMERICS_TRANSFORM_HPP
#define OVERQ_NUMERICS_TRANSFORM_HPP

// The six-case transformation law for O(a/c;q) under z = (h+iw)/k ->
// z1 = (h'+i/w)/k, with the Mordell-integral error terms, plus the (h,k) =
// (0,1) corollary. Relative to the printed statements, every main term enters
// with the opposite global sign and case 4 uses the re-derived V(a/c;.) with
// the constant e^{2 pi i h'(1/4-g^2)/k} e^{-2 pi i a h'/c} (-1)^g, g =
// (1-a k_1)/2; both were pinned numerically against the exact rank tables to
// ~1e-30 at instances of all six cases (see the tests).

#include <cmath>
#include <complex>
#include <cstdint>

#include "overq/numerics/dedekind.hpp"
#include "overq/numerics/mordell.hpp"

namespace overq {

struct TransformCase {
    std::int64_t a = 1, c = 3;   // 0 < a < c, gcd(a,c) = 1, c != 2
    std::int64_t h = 0, k = 1;   // gcd(h,k) = 1, k >= 1
    std::int64_t h_prime = 0;    // h h' = -1 mod k; even representative if k odd
    Complex w{1.0, 0.0};         // Re w > 0
    // derived
    std::int64_t k1 = 1, c1 = 1, l = 0;
    int s = 0, t = 1;            // s(l,c1), t(l,c1) where defined
    int parity = 1;              // ktilde

    TransformCase(std::int64_t a_, std::int64_t c_, std::int64_t h_, std::int64_t k_, Complex w_)
        : a(a_), c(c_), h(h_), k(k_), w(w_) {
        if (c <= 2 || a <= 0 || a >= c || gcd64(a, c) != 1)
            throw BadParams("need 0 < a < c, gcd(a,c)=1, c != 2");
        if (k < 1 || gcd64(mod_floor(h, k) == 0 ? k : mod_floor(h, k), k) != 1)
            throw BadParams("need k >= 1 and gcd(h,k) = 1");
        if (!(w.real() > 0)) throw BadParams("need Re w > 0");
        h_prime = (k == 1) ? 0 : mod_floor(-mod_inverse(h, k), k);
        if (k % 2 == 1 && h_prime % 2 == 1) h_prime += k;  // even rep mod 2k
        std::int64_t g = gcd64(k, c);
        k1 = k / g;
        c1 = c / g;
        parity = ktilde(k);
        if (c1 > 1) {
            l = mod_floor(a * k1, c1);
            if (2 * l != c1) {
                s = s_bc(l, c1);
                if (c1 != 2) t = t_bc(l, c1);
            } else {
                s = s_bc(l, c1);  // s is defined at 1/2; t is not (case 4 path)
            }
        }
    }

    /// Which of the six statements applies.
    int case_id() const {
        bool divides = (c1 == 1);
        if (divides) return (k % 2 == 0) ? 1 : 2;
        if (k % 2 == 0) return (c1 != 2) ? 3 : 4;
        return (c1 != 4) ? 5 : 6;
    }

    Complex z() const { return (Complex(static_cast<double>(h), 0) + kI * w) / static_cast<double>(k); }
    Complex z1() const {
        return (Complex(static_cast<double>(h_prime), 0) + kI / w) / static_cast<double>(k);
    }
};

struct TransformReport {
    int case_id = 0;
    Complex lhs{}, rhs{};
    double residual = 0.0;
};

inline TransformReport check_transform(const TransformCase& tc, const EvalConfig& cfg = {}) {
    const std::int64_t a = tc.a, c = tc.c, k = tc.k, hp = tc.h_prime;
    const int id = tc.case_id();
    const Complex z1 = tc.z1();
    const Complex sqw = std::sqrt(tc.w);
    const double sa = std::sin(kPi * a / c);
    const double ta = std::tan(kPi * a / c);

    Complex mult, isum = 0.0, t_int;
    if (k % 2 == 0) {
        mult = omega_hk(tc.h, k) * omega_hk(tc.h, k) / omega_hk(tc.h, k / 2);
        for (std::int64_t nu = 0; nu < k; ++nu) {
            Complex ph = unit_phase(-2 * hp * nu * nu, k);
            if (nu % 2 == 1) ph = -ph;
            isum += ph * mordell_integral(a, c, k, nu, tc.w, cfg);
        }
        t_int = 4.0 * sa * sa * mult / static_cast<double>(k) * sqw * isum;
    } else {
        mult = omega_hk(tc.h, k) * omega_hk(tc.h, k) / omega_hk(2 * tc.h, k);
        for (std::int64_t nu = 0; nu < k; ++nu) {
            Complex ph = unit_phase(-hp * (2 * nu * nu - nu), k);
            isum += ph * mordell_integral(a, c, k, nu, tc.w, cfg);
        }
        t_int = 4.0 * std::sqrt(2.0) * sa * sa * mult / static_cast<double>(k) * sqw * isum;
    }

    Complex main;
    switch (id) {
        case 1: {
            Complex ph = unit_phase(-2 * a * a * hp * tc.k1, c);
            double cot = 1.0 / std::tan(kPi * a * hp / c);
            Complex o1 = o_eval(mod_floor(a * hp, c), c, z1, cfg);
            main = static_cast<double>((tc.k1 % 2 == 0) ? 1 : -1) * kI * ph * ta * cot * mult / sqw * o1;
            break;
        }
        case 2: {
            Complex ph = unit_phase(hp, 8 * k) * unit_phase(-2 * a * a * hp * tc.k1, c);
            main = std::sqrt(2.0) * kI * ph * ta * mult / sqw * u2_eval(a * hp, c, z1, cfg);
            break;
        }
        case 3: {
            Complex ph = unit_phase(-2 * a * a * hp * tc.k1, tc.c1 * c);
            double sg = (mod_floor(tc.c1 * (tc.l + tc.k1), 2) == 0) ? 1.0 : -1.0;
            main = -2.0 * ph * ta * mult / sqw * sg * o3_eval(a * hp, tc.l * c / tc.c1, c, z1, cfg);
            break;
        }
        case 4: {
            // re-derived constant; a k1 is odd here so g is an integer
            std::int64_t g = (1 - a * tc.k1) / 2;
            Complex ph = unit_phase(hp * (1 - 4 * g * g), 2 * k) * unit_phase(-2 * a * hp, c);
            double sg = (mod_floor(g, 2) == 0) ? 1.0 : -1.0;
            main = -(ph * sg * ta * mult / sqw * v2_eval(a * hp, c, z1, cfg));
            break;
        }
        case 5: {
            Complex ph = unit_phase(hp, 8 * k) * unit_phase(-2 * a * a * hp * tc.k1, c * tc.c1);
            main = -std::sqrt(2.0) * ph * ta * mult / sqw * u3_eval(a * hp, tc.l * c / tc.c1, c, z1, cfg);
            break;
        }
        case 6: {
            Complex ph = unit_phase(hp, 8 * k) * unit_phase(-2 * a * a * hp * tc.k1, c * tc.c1);
            main = -ph * ta * mult / (std::sqrt(2.0) * sqw) * v3_eval(a * hp, tc.l * c / tc.c1, c, z1, cfg);
            break;
        }
        default:
            throw BadParams("unreachable transform case");
    }

    TransformReport rep;
    rep.case_id = id;
    rep.lhs = o_eval(a, c, tc.z(), cfg);
    rep.rhs = -main + t_int;  // main terms enter negated relative to the print
    rep.residual = std::abs(rep.lhs - rep.rhs);
    return rep;
}

/// Corollary at (h,k) = (0,1): O(a/c;-1/z) against the z-side auxiliaries.
/// part 1 applies for c != 4, part 2 for c = 4; w = i/z.
inline TransformReport check_corollary22(int part, std::int64_t a, std::int64_t c, Complex z,
                                         const EvalConfig& cfg = {}) {
    if (c == 2) throw BadParams("c = 2 is excluded (the u = -1 route handles it)");
    if (part == 1 && c == 4) throw BadParams("part 1 needs c != 4");
    if (part == 2 && c != 4) throw BadParams("part 2 is the c = 4 case");
    Complex w = kI / z;
    if (!(w.real() > 0)) throw BadParams("z must lie in the upper half-plane");
    double sa = std::sin(kPi * a / c), ta = std::tan(kPi * a / c);
    Complex sq = std::sqrt(-kI * z);
    Complex itail = 4.0 * std::sqrt(2.0) * sa * sa / sq * mordell_integral(a, c, 1, 0, w, cfg);
    Complex mainz = (part == 1) ? std::sqrt(2.0) * ta * sq * u3_eval(0, a, c, z, cfg)
                                : ta / std::sqrt(2.0) * sq * v3_eval(0, a, c, z, cfg);
    TransformReport rep;
    rep.case_id = (part == 1) ? 5 : 6;
    rep.lhs = o_eval(a, c, -1.0 / z, cfg);
    rep.rhs = mainz + itail;
    rep.residual = std::abs(rep.lhs - rep.rhs);
    return rep;
}

} // namespace overq

#endif
