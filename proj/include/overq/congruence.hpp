#ifndef OVERQ_CONGRUENCE_HPP
#define OVERQ_CONGRUENCE_HPP

// Desk-scale congruence machinery for N(r,t;n): deficiency series, the
// coefficient-level ell-twist, claim verification and progression scans.
// Scan output is always EMPIRICAL: the underlying theorems prove existence of
// progressions, never that a particular (A,B) works beyond the tested range.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "overq/frac_series.hpp"
#include "overq/overpartitions.hpp"

namespace overq {

struct CongruenceClaim {
    std::int64_t A = 1;          // progression modulus
    std::int64_t B = 0;          // progression residue, 0 <= B < A
    std::int64_t t = 1;          // rank modulus
    std::int64_t ell = 5;        // prime
    std::int64_t j = 1;          // power: congruence mod ell^j
    std::vector<std::int64_t> r_set;  // claimed residues; empty = all of [0,t)

    Int modulus() const {
        Int m(1);
        for (std::int64_t i = 0; i < j; ++i) m *= ell;
        return m;
    }
    std::vector<std::int64_t> residues() const {
        if (!r_set.empty()) return r_set;
        std::vector<std::int64_t> all(static_cast<std::size_t>(t));
        for (std::int64_t r = 0; r < t; ++r) all[static_cast<std::size_t>(r)] = r;
        return all;
    }
};

enum class ClaimStatus { PassToBound, Fail, Empirical };

struct ClaimReport {
    CongruenceClaim claim;
    ClaimStatus status = ClaimStatus::Fail;
    std::int64_t checked_to = 0;               // largest n index tested
    std::optional<std::int64_t> fail_n;        // first counterexample (n index)
    std::optional<std::int64_t> fail_r;
    bool aggregate_pbar_ok = false;            // sum_r N(r,t;An+B) = pbar(An+B) = 0 mod ell^j
};

/// sum_n (N(r,t;n) - pbar(n)/t) q^n, exact rational coefficients.
inline QSeries deficiency_series(std::int64_t r, std::int64_t t, std::int64_t max_n,
                                 const ResidueTable& table) {
    if (t < 1) throw BadParams("t must be >= 1");
    if (table.modulus() != t || table.max_n() < max_n)
        throw InsufficientTable("residue table does not cover the request");
    QSeries out(1, max_n + 1);
    for (std::int64_t n = 0; n <= max_n; ++n) {
        Rat v(table.count(r, n));
        v -= Rat(table.pbar(n)) / t;
        out.set(n, v);
    }
    return out;
}

/// Keep a(n) only when the Legendre symbol (-n | ell) equals -1; the
/// coefficient-level effect of the twist that kills non-holomorphic parts.
inline std::vector<Int> twist_restrict(const std::vector<Int>& seq, std::int64_t ell) {
    if (ell < 3 || ell % 2 == 0) throw BadParams("twist needs an odd prime ell");
    std::vector<Int> out(seq.size(), Int(0));
    for (std::size_t n = 0; n < seq.size(); ++n)
        if (kronecker(-static_cast<std::int64_t>(n), ell) == -1) out[n] = seq[n];
    return out;
}

inline ZSeries twist_restrict(const ZSeries& s, std::int64_t ell) {
    if (s.denom() != 1) throw LatticeMismatch("twist acts on integer-exponent series");
    ZSeries out(1, s.trunc());
    for (const auto& [e, c] : s.terms())
        if (kronecker(-e, ell) == -1) out.set(e, c);
    return out;
}

/// Check N(r,t;An+B) = 0 mod ell^j for the claimed residues and n <= n_max.
inline ClaimReport verify_claim(const CongruenceClaim& claim, const ResidueTable& table,
                                std::int64_t n_max) {
    if (claim.A < 1 || claim.B < 0 || claim.B >= claim.A) throw BadParams("need 0 <= B < A");
    if (table.modulus() != claim.t) throw BadParams("table modulus does not match claim");
    if (table.max_n() < claim.A * n_max + claim.B)
        throw InsufficientTable("residue table shallower than A*n_max + B");
    ClaimReport rep;
    rep.claim = claim;
    rep.checked_to = n_max;
    Int mod = claim.modulus();
    for (std::int64_t n = 0; n <= n_max; ++n) {
        std::int64_t idx = claim.A * n + claim.B;
        for (std::int64_t r : claim.residues()) {
            if (table.count(r, idx) % mod != 0) {
                rep.status = ClaimStatus::Fail;
                rep.fail_n = n;
                rep.fail_r = r;
                rep.aggregate_pbar_ok = false;
                return rep;
            }
        }
    }
    rep.status = ClaimStatus::PassToBound;
    rep.aggregate_pbar_ok = true;
    for (std::int64_t n = 0; n <= n_max && rep.aggregate_pbar_ok; ++n)
        if (table.pbar(claim.A * n + claim.B) % mod != 0) rep.aggregate_pbar_ok = false;
    return rep;
}

/// All progressions A <= A_max with every residue class passing to n_max.
/// Hits are EMPIRICAL observations, never proofs.
inline std::vector<ClaimReport> scan_progressions(std::int64_t t, std::int64_t ell, std::int64_t j,
                                                  std::int64_t A_max, std::int64_t n_max,
                                                  const ResidueTable& table) {
    std::vector<ClaimReport> hits;
    for (std::int64_t A = 1; A <= A_max; ++A) {
        for (std::int64_t B = 0; B < A; ++B) {
            CongruenceClaim c{A, B, t, ell, j, {}};
            if (table.max_n() < A * n_max + B)
                throw InsufficientTable("scan needs table depth >= A_max*n_max");
            ClaimReport rep = verify_claim(c, table, n_max);
            if (rep.status == ClaimStatus::PassToBound) {
                rep.status = ClaimStatus::Empirical;
                hits.push_back(std::move(rep));
            }
        }
    }
    return hits;
}

struct RankDifferenceSeries {
    std::int64_t ell = 5;
    std::int64_t s1 = 0, s2 = 0, d = 0;
    ZSeries series;  // supported on exponents = d mod ell
};

/// R_{s1,s2}(d) = sum_n (N(s1,ell;ell n+d) - N(s2,ell;ell n+d)) q^{ell n+d}.
inline RankDifferenceSeries rank_difference(std::int64_t ell, std::int64_t s1, std::int64_t s2,
                                            std::int64_t d, std::int64_t max_n,
                                            const ResidueTable& table) {
    if (s1 < 0 || s1 >= ell || s2 < 0 || s2 >= ell || d < 0 || d >= ell)
        throw BadParams("need 0 <= s1, s2, d < ell");
    if (table.modulus() != ell || table.max_n() < max_n)
        throw InsufficientTable("residue table does not cover the request");
    RankDifferenceSeries out{ell, s1, s2, d, ZSeries(1, max_n + 1)};
    for (std::int64_t e = d; e <= max_n; e += ell)
        out.series.set(e, table.count(s1, e) - table.count(s2, e));
    return out;
}

} // namespace overq

#endif
