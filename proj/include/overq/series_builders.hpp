#ifndef OVERQ_SERIES_BUILDERS_HPP
#define OVERQ_SERIES_BUILDERS_HPP

// Expansion builders for eta products, q-Pochhammer symbols and the
// generalized Dedekind eta E_{g,h}. All exact; eta(m z) lives on the lattice
// (1/24)Z, E_{g,h}(scale z) on a lattice dividing 12 N^2.

#include <cstdint>

#include "overq/frac_series.hpp"

namespace overq {

/// Truncation request for builders: keep exponents strictly below `q_depth`
/// (measured in whole powers of q).
struct SeriesDepth {
    std::int64_t q_depth = 64;
};

/// eta(m z) = q^{m/24} prod_{n>=1} (1 - q^{mn}), on the reduced lattice.
inline ZSeries eta_expansion(std::int64_t m, const SeriesDepth& cfg) {
    if (m < 1) throw BadParams("eta_expansion needs scale >= 1");
    const std::int64_t D = 24;
    std::int64_t trunc = cfg.q_depth * D;
    ZSeries prod = ZSeries::one(D, trunc);
    for (std::int64_t n = 1; m * n * D < trunc; ++n) {
        ZSeries f = ZSeries::one(D, trunc);
        f.set(m * n * D, Int(-1));
        prod = prod * f;
    }
    ZSeries lead = ZSeries::monomial(Int(1), m, D, trunc);
    return (prod * lead).normalized();
}

/// (s q^{jn}/j_d ; q)_n = prod_{r=0}^{n-1} (1 - s q^{j_num/j_den + r}),
/// with n = -1 meaning the infinite product (truncation bounds it anyway).
inline ZSeries pochhammer_expansion(std::int64_t j_num, std::int64_t j_den, int sign,
                                    std::int64_t n, const SeriesDepth& cfg) {
    if (j_den <= 0) throw BadParams("pochhammer exponent denominator must be positive");
    if (sign != 1 && sign != -1) throw BadParams("pochhammer sign must be +-1");
    std::int64_t g = gcd64(std::abs(j_num) + (j_num == 0), j_den);
    (void)g;
    const std::int64_t D = j_den;
    std::int64_t trunc = cfg.q_depth * D;
    ZSeries prod = ZSeries::one(D, trunc);
    for (std::int64_t r = 0; n < 0 || r < n; ++r) {
        std::int64_t e = j_num + r * D;  // exponent numerator of q^{j + r}
        if (e >= trunc) break;
        if (e < 0 && n < 0)
            throw BadParams("infinite Pochhammer product needs a vanishing base term");
        ZSeries f = ZSeries::one(D, trunc);
        f.add_term(e, Int(-sign));
        prod = prod * f;
    }
    return prod.normalized();
}

/// Generalized Dedekind eta E_{g,h}(scale z) with B(x) = x^2 - x + 1/6:
///   q^{scale B(g/N)/2} prod_{m>=1} (1 - zeta_N^h q^{scale(m-1+g/N)})
///                                  (1 - zeta_N^{-h} q^{scale(m-g/N)}).
/// Exact integer coefficients require h = 0 (mod N); the five rank-difference
/// identities only use h = 0.
inline ZSeries generalized_eta(std::int64_t N, std::int64_t g, std::int64_t h,
                               std::int64_t scale, const SeriesDepth& cfg) {
    if (N < 1 || scale < 1) throw BadParams("generalized_eta needs N, scale >= 1");
    if (mod_floor(g, N) == 0 && mod_floor(h, N) == 0)
        throw BadParams("E_{g,h}: g and h must not both be 0 mod N");
    if (mod_floor(h, N) != 0)
        throw Unsupported("E_{g,h} with h != 0 mod N needs cyclotomic coefficients");
    // leading exponent scale*B(g/N)/2 = scale*(6g^2 - 6gN + N^2) / (12 N^2)
    std::int64_t lead_num = scale * (6 * g * g - 6 * g * N + N * N);
    std::int64_t lead_den = 12 * N * N;
    // lattice: lcm of lead_den and the product lattice N/gcd(scale, N)...; use
    // D = 12 N^2 (product exponents scale*(mN +- g)/N always fit: (12N)*int)
    const std::int64_t D = 12 * N * N;
    std::int64_t trunc = cfg.q_depth * D;
    std::int64_t lead = lead_num * (D / lead_den);
    ZSeries prod = ZSeries::one(D, trunc);
    for (std::int64_t m = 1;; ++m) {
        // exponent numerators on D: scale*((m-1)N + g)*12N and scale*(mN - g)*12N
        std::int64_t e1 = scale * ((m - 1) * N + g) * 12 * N;
        std::int64_t e2 = scale * (m * N - g) * 12 * N;
        if (std::min(e1, e2) + lead >= trunc && e1 + lead >= trunc && e2 + lead >= trunc) break;
        ZSeries f1 = ZSeries::one(D, trunc);
        f1.add_term(e1, Int(-1));
        ZSeries f2 = ZSeries::one(D, trunc);
        f2.add_term(e2, Int(-1));
        prod = prod * f1 * f2;
    }
    ZSeries out(D, trunc);
    for (const auto& [e, c] : prod.terms()) out.add_term(e + lead, c);
    return out.normalized();
}

/// P(q) = eta(2z)/eta(z)^2 = sum pbar(n) q^n; the q^{1/24} powers cancel.
inline ZSeries pbar_series(const SeriesDepth& cfg) {
    ZSeries e1 = eta_expansion(1, cfg);
    ZSeries e2 = eta_expansion(2, cfg);
    ZSeries r = e2 * (e1 * e1).invert();
    return r.normalized();
}

} // namespace overq

#endif
