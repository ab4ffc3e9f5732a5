#ifndef OVERQ_IDENTITIES_HPP
#define OVERQ_IDENTITIES_HPP

// The five rank-difference identities, verified by exact integer comparison
// of the residue-table left side against eta / generalized-eta right sides.
// Identity (4) has a vanishing right side and is the strongest exactness test
// of the whole exact pipeline.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "overq/congruence.hpp"
#include "overq/series_builders.hpp"

namespace overq {

struct EtaFactor {
    std::int64_t scale = 1;   // eta(scale z) or E_{g,0}(scale z)
    std::int64_t g = 0;       // 0: plain eta; else E_{g,0} with modulus N
    std::int64_t N = 0;
    int power = 1;            // +1 numerator, -1 denominator
};

struct IdentitySpec {
    int id = 0;
    std::int64_t ell = 5;
    std::int64_t s1 = 0, s2 = 0, d = 0;
    Int scalar = 0;                 // 0 encodes an identically-zero right side
    std::vector<EtaFactor> recipe;
};

inline const std::vector<IdentitySpec>& identity_specs() {
    static const std::vector<IdentitySpec> specs = {
        {1, 5, 1, 2, 2, Int(2), {{50, 0, 0, +1}, {25, 1, 5, -1}}},
        {2, 5, 1, 2, 3, Int(-2), {{50, 0, 0, +1}, {25, 2, 5, -1}}},
        {3, 5, 0, 2, 3, Int(2), {{50, 0, 0, +1}, {25, 2, 5, -1}}},
        {4, 5, 0, 2, 2, Int(0), {}},
        {5, 3, 0, 1, 1, Int(2), {{9, 0, 0, +1}, {18, 0, 0, +1}, {3, 0, 0, -1}}},
    };
    return specs;
}

inline const IdentitySpec& identity_spec(int id) {
    for (const auto& s : identity_specs())
        if (s.id == id) return s;
    throw BadParams("identity id must be 1..5");
}

/// Left side to `depth` progression terms (exponents up to ell*depth + d).
inline ZSeries build_lhs(const IdentitySpec& spec, std::int64_t depth, const ResidueTable& table) {
    std::int64_t max_e = spec.ell * depth + spec.d;
    if (table.modulus() != spec.ell || table.max_n() < max_e)
        throw InsufficientTable("residue table shallower than ell*depth + d");
    return rank_difference(spec.ell, spec.s1, spec.s2, spec.d, max_e, table).series;
}

/// Right side to the same depth; the fractional eta prefactors must cancel to
/// integer exponents or the recipe was transcribed wrong.
inline ZSeries build_rhs(const IdentitySpec& spec, std::int64_t depth) {
    std::int64_t max_e = spec.ell * depth + spec.d;
    if (is_zero(spec.scalar)) return ZSeries(1, max_e + 1);
    SeriesDepth cfg{max_e + 1};
    ZSeries acc = ZSeries::one(1, max_e + 1);
    for (const auto& f : spec.recipe) {
        ZSeries factor = (f.g == 0) ? eta_expansion(f.scale, cfg)
                                    : generalized_eta(f.N, f.g, 0, f.scale, cfg);
        acc = acc * (f.power > 0 ? factor : factor.invert());
    }
    acc = spec.scalar * acc;
    ZSeries norm = acc.normalized();
    if (norm.denom() != 1)
        throw LatticeMismatch("identity RHS did not cancel to integer exponents");
    return norm;
}

struct IdentityReport {
    int id = 0;
    std::int64_t depth = 0;
    bool pass = false;
    std::optional<std::int64_t> first_mismatch_exponent;
    Int lhs_coeff = 0, rhs_coeff = 0;
};

/// Exact termwise comparison to `depth` progression terms. Never numeric.
inline IdentityReport verify_identity(const IdentitySpec& spec, std::int64_t depth,
                                      const ResidueTable& table) {
    IdentityReport rep;
    rep.id = spec.id;
    rep.depth = depth;
    ZSeries lhs = build_lhs(spec, depth, table);
    ZSeries rhs = build_rhs(spec, depth);
    std::int64_t max_e = spec.ell * depth + spec.d;
    for (std::int64_t e = 0; e <= max_e; ++e) {
        Int l = lhs.coeff(e);
        Int r = rhs.coeff(e);
        if (l != r) {
            rep.pass = false;
            rep.first_mismatch_exponent = e;
            rep.lhs_coeff = l;
            rep.rhs_coeff = r;
            return rep;
        }
    }
    rep.pass = true;
    return rep;
}

inline IdentityReport verify_identity(int id, std::int64_t depth) {
    const IdentitySpec& spec = identity_spec(id);
    ResidueTable table = residue_table_lambert(spec.ell, spec.ell * depth + spec.d);
    return verify_identity(spec, depth, table);
}

} // namespace overq

#endif
