#ifndef OVERQ_OVERPARTITIONS_HPP
#define OVERQ_OVERPARTITIONS_HPP

// Exact rank statistics for overpartitions. N(m,n) counts overpartitions of n
// with rank m (largest part minus number of parts; the empty overpartition
// has rank 0). Three independent constructions are provided: the Lambert
// form, the Eulerian form, and brute-force enumeration; they are
// cross-checked in the test suite. Since overlining does not change the parts
// multiset, every overpartition built from a partition with d distinct part
// values shares its rank, so enumeration may weight each partition by 2^d.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "overq/biseries.hpp"
#include "overq/errors.hpp"
#include "overq/int_types.hpp"
#include "overq/series_builders.hpp"

namespace overq {

inline constexpr std::int64_t kBruteForceBound = 40;

struct Overpartition {
    std::vector<int> parts;      // non-increasing
    std::vector<int> overlined;  // distinct part values whose first occurrence is overlined

    std::int64_t rank() const {
        if (parts.empty()) return 0;
        return parts.front() - static_cast<std::int64_t>(parts.size());
    }
};

/// Every overpartition of n, exactly once. Count equals pbar(n).
inline std::vector<Overpartition> enumerate_overpartitions(std::int64_t n) {
    if (n < 0 || n > kBruteForceBound)
        throw TooLarge("enumerate_overpartitions bound is " + std::to_string(kBruteForceBound));
    std::vector<Overpartition> out;
    std::vector<int> parts;
    auto emit = [&]() {
        std::vector<int> distinct;
        for (int p : parts)
            if (distinct.empty() || distinct.back() != p) distinct.push_back(p);
        std::size_t d = distinct.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << d); ++mask) {
            Overpartition op;
            op.parts = parts;
            for (std::size_t i = 0; i < d; ++i)
                if (mask & (std::uint64_t(1) << i)) op.overlined.push_back(distinct[i]);
            out.push_back(std::move(op));
        }
    };
    auto rec = [&](auto&& self, std::int64_t rem, int maxp) -> void {
        if (rem == 0) {
            emit();
            return;
        }
        for (int p = std::min<std::int64_t>(rem, maxp); p >= 1; --p) {
            parts.push_back(p);
            self(self, rem - p, p);
            parts.pop_back();
        }
    };
    rec(rec, n, static_cast<int>(n));
    return out;
}

class RankTable {
public:
    RankTable(std::int64_t max_n, std::string method)
        : max_n_(max_n), method_(std::move(method)), rows_(static_cast<std::size_t>(max_n + 1)) {
        for (std::int64_t n = 0; n <= max_n; ++n)
            rows_[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(2 * n + 1), Int(0));
    }

    std::int64_t max_n() const { return max_n_; }
    const std::string& method() const { return method_; }

    /// N(m, n); zero outside |m| <= n.
    const Int& count(std::int64_t m, std::int64_t n) const {
        static const Int kZero(0);
        if (n < 0 || n > max_n_ || m < -n || m > n) return kZero;
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m + n)];
    }

    void add(std::int64_t m, std::int64_t n, const Int& v) {
        rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m + n)] += v;
    }

    Int pbar(std::int64_t n) const {
        Int s(0);
        for (const auto& v : rows_[static_cast<std::size_t>(n)]) s += v;
        return s;
    }

    friend bool operator==(const RankTable& a, const RankTable& b) {
        return a.max_n_ == b.max_n_ && a.rows_ == b.rows_;
    }

private:
    std::int64_t max_n_;
    std::string method_;
    std::vector<std::vector<Int>> rows_;
};

/// Counts via partition enumeration with 2^{distinct} overlining weights.
inline RankTable rank_table_bruteforce(std::int64_t max_n) {
    if (max_n < 0 || max_n > kBruteForceBound)
        throw TooLarge("rank_table_bruteforce bound is " + std::to_string(kBruteForceBound));
    RankTable t(max_n, "bruteforce");
    t.add(0, 0, Int(1));
    std::vector<int> parts;
    auto rec = [&](auto&& self, std::int64_t rem, int maxp, int distinct) -> void {
        if (rem == 0) {
            std::int64_t total = 0;
            for (int p : parts) total += p;
            std::int64_t m = parts.front() - static_cast<std::int64_t>(parts.size());
            t.add(m, total, Int(1) << distinct);
            return;
        }
        for (int p = std::min<std::int64_t>(rem, maxp); p >= 1; --p) {
            bool newval = parts.empty() || parts.back() != p;
            parts.push_back(p);
            self(self, rem - p, p, distinct + (newval ? 1 : 0));
            parts.pop_back();
        }
    };
    for (std::int64_t n = 1; n <= max_n; ++n) rec(rec, n, static_cast<int>(n), 0);
    return t;
}

namespace detail {

/// eta(2z)/eta(z)^2 as a plain integer-exponent coefficient vector to depth N.
inline std::vector<Int> pbar_coeffs(std::int64_t depth) {
    SeriesDepth d{depth + 1};
    ZSeries p = pbar_series(d);
    if (p.denom() != 1) throw LatticeMismatch("pbar series should be integral");
    std::vector<Int> out(static_cast<std::size_t>(depth + 1), Int(0));
    for (const auto& [e, c] : p.terms())
        if (e >= 0 && e <= depth) out[static_cast<std::size_t>(e)] = c;
    return out;
}

inline RankTable table_from_biseries(const BiSeries& s, std::int64_t max_n, const std::string& method) {
    RankTable t(max_n, method);
    for (std::int64_t n = 0; n <= max_n; ++n) {
        const UPoly& p = s.coeff(n);
        for (std::int64_t m = p.lo(); m <= p.hi(); ++m) {
            Int c = p.coeff(m);
            if (!is_zero(c)) t.add(m, n, c);
        }
    }
    return t;
}

} // namespace detail

/// Lambert form: (eta(2z)/eta^2(z)) (1 + 2 sum_{n>=1} (1-u)(1-u^{-1})(-1)^n
/// q^{n^2+n} / ((1-u q^n)(1-u^{-1} q^n))), expanded with geometric series.
inline RankTable rank_table_lambert(std::int64_t max_n) {
    if (max_n < 0) throw BadParams("max_n must be >= 0");
    std::int64_t T = max_n + 1;
    BiSeries inner(T);
    inner.add(0, 0, Int(1));  // the leading 1
    for (std::int64_t n = 1; n * n + n < T; ++n) {
        Int sgn = (n % 2 == 0) ? Int(2) : Int(-2);
        std::int64_t base = n * n + n;
        // 2 (-1)^n q^{n^2+n} sum_{j,k>=0} u^{j-k} q^{n(j+k)}
        for (std::int64_t j = 0; base + n * j < T; ++j)
            for (std::int64_t k = 0; base + n * (j + k) < T; ++k)
                inner.add(base + n * (j + k), j - k, sgn);
    }
    // multiply by (1-u)(1-u^{-1}) = 2 - u - u^{-1} except the constant 1 term:
    // track the "1 +" separately so the n=0 coefficient stays exactly 1.
    BiSeries sum(T);
    sum.add(0, 0, Int(1));
    BiSeries lam = inner.times_sparse({{0, 1, Int(-1)}, {0, 0, Int(2)}, {0, -1, Int(-1)}});
    // remove the (1-u)(1-u^{-1}) applied to the tracked constant 1
    lam.add(0, 1, Int(1));
    lam.add(0, 0, Int(-2));
    lam.add(0, -1, Int(1));
    sum += lam;
    auto pref = detail::pbar_coeffs(max_n);
    std::vector<std::tuple<std::int64_t, std::int64_t, Int>> pf;
    for (std::size_t e = 0; e < pref.size(); ++e)
        if (!is_zero(pref[e])) pf.emplace_back(static_cast<std::int64_t>(e), 0, pref[e]);
    BiSeries full = sum.times_sparse(pf);
    return detail::table_from_biseries(full, max_n, "lambert");
}

/// Eulerian form: sum_{n>=0} (-1)_n q^{n(n+1)/2} / (uq, q/u)_n, built by the
/// term-to-term recursion T_n = T_{n-1} (1+q^{n-1}) q^n / ((1-u q^n)(1-u^{-1} q^n)).
inline RankTable rank_table_eulerian(std::int64_t max_n) {
    if (max_n < 0) throw BadParams("max_n must be >= 0");
    std::int64_t T = max_n + 1;
    BiSeries total(T);
    total.add(0, 0, Int(1));  // n = 0 term
    BiSeries term(T);
    term.add(0, 0, Int(1));
    for (std::int64_t n = 1; n * (n + 1) / 2 < T; ++n) {
        // (1 + q^{n-1}); for n = 1 this is the factor 2 from (-1)_n
        term = term.times_sparse({{0, 0, Int(1)}, {n - 1, 0, Int(1)}});
        // q^n * geometric expansions of 1/(1-u q^n) and 1/(1-u^{-1} q^n)
        std::vector<std::tuple<std::int64_t, std::int64_t, Int>> g1, g2;
        for (std::int64_t j = 0; n + n * j < T; ++j) g1.emplace_back(n + n * j, j, Int(1));
        for (std::int64_t k = 0; n * k < T; ++k) g2.emplace_back(n * k, -k, Int(1));
        term = term.times_sparse(g1).times_sparse(g2);
        total += term;
    }
    return detail::table_from_biseries(total, max_n, "eulerian");
}

class ResidueTable {
public:
    ResidueTable(std::int64_t t, std::int64_t max_n)
        : t_(t), max_n_(max_n),
          counts_(static_cast<std::size_t>(t), std::vector<Int>(static_cast<std::size_t>(max_n + 1), Int(0))) {
        if (t < 1) throw BadParams("residue modulus must be >= 1");
    }

    std::int64_t modulus() const { return t_; }
    std::int64_t max_n() const { return max_n_; }

    const Int& count(std::int64_t r, std::int64_t n) const {
        return counts_[static_cast<std::size_t>(mod_floor(r, t_))][static_cast<std::size_t>(n)];
    }

    void add(std::int64_t r, std::int64_t n, const Int& v) {
        counts_[static_cast<std::size_t>(mod_floor(r, t_))][static_cast<std::size_t>(n)] += v;
    }

    Int pbar(std::int64_t n) const {
        Int s(0);
        for (std::int64_t r = 0; r < t_; ++r) s += count(r, n);
        return s;
    }

    friend bool operator==(const ResidueTable& a, const ResidueTable& b) {
        return a.t_ == b.t_ && a.max_n_ == b.max_n_ && a.counts_ == b.counts_;
    }

private:
    std::int64_t t_;
    std::int64_t max_n_;
    std::vector<std::vector<Int>> counts_;
};

/// Aggregation N(r,t;n) = sum_{m = r mod t} N(m,n) from a full rank table.
inline ResidueTable residue_table(std::int64_t t, std::int64_t max_n, const RankTable& source) {
    if (source.max_n() < max_n) throw InsufficientTable("rank table shallower than requested depth");
    ResidueTable out(t, max_n);
    for (std::int64_t n = 0; n <= max_n; ++n)
        for (std::int64_t m = -n; m <= n; ++m) {
            const Int& c = source.count(m, n);
            if (!is_zero(c)) out.add(m, n, c);
        }
    return out;
}

/// Direct residue-class construction: the Lambert expansion run in the
/// quotient ring Z[u]/(u^t - 1), which keeps only t coefficients per q-power
/// and reaches the depths the identity checks need.
inline ResidueTable residue_table_lambert(std::int64_t t, std::int64_t max_n) {
    if (t < 1) throw BadParams("residue modulus must be >= 1");
    if (max_n < 0) throw BadParams("max_n must be >= 0");
    std::int64_t T = max_n + 1;
    std::vector<std::vector<Int>> acc(static_cast<std::size_t>(T),
                                      std::vector<Int>(static_cast<std::size_t>(t), Int(0)));
    acc[0][0] = Int(1);
    auto addu = [&](std::int64_t n, std::int64_t m, const Int& v) {
        acc[static_cast<std::size_t>(n)][static_cast<std::size_t>(mod_floor(m, t))] += v;
    };
    for (std::int64_t n = 1; n * n + n < T; ++n) {
        Int two = (n % 2 == 0) ? Int(2) : Int(-2);
        std::int64_t base = n * n + n;
        for (std::int64_t j = 0; base + n * j < T; ++j)
            for (std::int64_t k = 0; base + n * (j + k) < T; ++k) {
                std::int64_t e = base + n * (j + k);
                // (2 - u - u^{-1}) u^{j-k} times (-1)^n 2
                addu(e, j - k, two * 2);
                addu(e, j - k + 1, -two);
                addu(e, j - k - 1, -two);
            }
    }
    auto pref = detail::pbar_coeffs(max_n);
    ResidueTable out(t, max_n);
    for (std::int64_t n = 0; n < T; ++n) {
        for (std::int64_t e = 0; e <= n; ++e) {
            const Int& p = pref[static_cast<std::size_t>(e)];
            if (is_zero(p)) continue;
            const auto& row = acc[static_cast<std::size_t>(n - e)];
            for (std::int64_t r = 0; r < t; ++r)
                if (!is_zero(row[static_cast<std::size_t>(r)])) out.add(r, n, p * row[static_cast<std::size_t>(r)]);
        }
    }
    return out;
}

} // namespace overq

#endif
