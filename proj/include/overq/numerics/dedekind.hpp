#ifndef OVERQ_NUMERICS_DEDEKIND_HPP
#define OVERQ_NUMERICS_DEDEKIND_HPP

// The eta multiplier system omega_{h,k} = exp(pi i sum_{mu mod k}
// ((mu/k))((h mu/k))) computed through exact rational sawtooth sums, so the
// returned root of unity carries no phase drift.

#include <complex>
#include <cstdint>

#include "overq/int_types.hpp"

namespace overq {

/// Exact Dedekind sum s(h,k) = sum_{mu mod k} ((mu/k))((h mu/k)).
inline Rat dedekind_sum(std::int64_t h, std::int64_t k) {
    if (k < 1) throw BadParams("dedekind_sum needs k >= 1");
    std::int64_t hm = mod_floor(h, k);
    Rat s(0);
    for (std::int64_t mu = 1; mu < k; ++mu) {
        std::int64_t v = (hm * mu) % k;
        if (v == 0) continue;  // ((integer)) = 0
        // ((mu/k)) ((v/k)) = (2mu - k)(2v - k) / (4k^2)
        s += Rat(Int(2 * mu - k) * Int(2 * v - k), Int(4) * k * k);
    }
    return s;
}

/// omega_{h,k}: a root of unity; the exponent rational is reduced mod 2
/// before any floating-point enters.
inline std::complex<double> omega_hk(std::int64_t h, std::int64_t k) {
    if (k < 1) throw BadParams("omega_hk needs k >= 1");
    if (gcd64(std::abs(mod_floor(h, k)) == 0 ? k : mod_floor(h, k), k) != 1 && k > 1)
        throw BadParams("omega_hk needs gcd(h,k) = 1");
    Rat s = dedekind_sum(h, k);
    // reduce s mod 2 exactly
    Int num = boost::multiprecision::numerator(s);
    Int den = boost::multiprecision::denominator(s);
    Int twice_den = 2 * den;
    Int r = num % twice_den;
    if (r < 0) r += twice_den;
    double frac = static_cast<double>(Rat(r, den));  // in [0, 2)
    double ang = 3.14159265358979323846 * frac;
    return {std::cos(ang), std::sin(ang)};
}

/// Exact phase e^{pi i num/den} with the rational reduced mod 2 first.
inline std::complex<double> unit_phase(std::int64_t num, std::int64_t den) {
    if (den == 0) throw BadParams("unit_phase denominator is zero");
    if (den < 0) { den = -den; num = -num; }
    std::int64_t m = mod_floor(num, 2 * den);
    double ang = 3.14159265358979323846 * static_cast<double>(m) / static_cast<double>(den);
    return {std::cos(ang), std::sin(ang)};
}

} // namespace overq

#endif
