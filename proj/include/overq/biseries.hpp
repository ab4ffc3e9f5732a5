#ifndef OVERQ_BISERIES_HPP
#define OVERQ_BISERIES_HPP

// Two-variable truncated series sum_{n < trunc} p_n(u) q^n where each p_n is
// an exact Laurent polynomial in u. Houses the rank generating function; the
// u-support of the q^n coefficient stays inside [-(n-1), n-1] for n >= 1
// throughout the expansions used here, which bounds memory by O(trunc^2).

#include <cstdint>
#include <vector>

#include "overq/errors.hpp"
#include "overq/int_types.hpp"

namespace overq {

/// Laurent polynomial in u with Int coefficients: sum c[i] u^{lo+i}.
class UPoly {
public:
    UPoly() = default;

    bool empty() const { return c_.empty(); }
    std::int64_t lo() const { return lo_; }
    std::int64_t hi() const { return lo_ + static_cast<std::int64_t>(c_.size()) - 1; }

    Int coeff(std::int64_t m) const {
        if (m < lo_ || m > hi()) return Int(0);
        return c_[static_cast<std::size_t>(m - lo_)];
    }

    void add(std::int64_t m, const Int& v) {
        if (is_zero(v)) return;
        if (c_.empty()) {
            lo_ = m;
            c_.push_back(v);
            return;
        }
        if (m < lo_) {
            c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - m), Int(0));
            lo_ = m;
        } else if (m > hi()) {
            c_.resize(static_cast<std::size_t>(m - lo_ + 1));
        }
        c_[static_cast<std::size_t>(m - lo_)] += v;
        trim();
    }

    void add_scaled(const UPoly& other, std::int64_t shift, const Int& scale) {
        for (std::size_t i = 0; i < other.c_.size(); ++i) {
            if (!is_zero(other.c_[i]))
                add(other.lo_ + static_cast<std::int64_t>(i) + shift, other.c_[i] * scale);
        }
    }

    /// Evaluate at u = 1 (column sums of the rank table).
    Int at_one() const {
        Int s(0);
        for (const auto& v : c_) s += v;
        return s;
    }

    friend bool operator==(const UPoly& a, const UPoly& b) {
        return a.lo_ == b.lo_ && a.c_ == b.c_;
    }

private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
        std::size_t k = 0;
        while (k < c_.size() && is_zero(c_[k])) ++k;
        if (k > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(k));
            lo_ += static_cast<std::int64_t>(k);
        }
        if (c_.empty()) lo_ = 0;
    }

    std::int64_t lo_ = 0;
    std::vector<Int> c_;
};

class BiSeries {
public:
    explicit BiSeries(std::int64_t trunc) : coef_(static_cast<std::size_t>(trunc)) {}

    std::int64_t trunc() const { return static_cast<std::int64_t>(coef_.size()); }

    const UPoly& coeff(std::int64_t n) const { return coef_[static_cast<std::size_t>(n)]; }

    void add(std::int64_t n, std::int64_t m, const Int& v) {
        if (n < 0 || n >= trunc()) return;
        coef_[static_cast<std::size_t>(n)].add(m, v);
    }

    /// this *= sum over (qexp, c) of c q^{qexp} u^{ushift}, a sparse factor.
    /// Terms must have qexp >= 0, and at least one with qexp == 0 only when
    /// iterating descending stays consistent; general safe version allocates.
    BiSeries times_sparse(const std::vector<std::tuple<std::int64_t, std::int64_t, Int>>& f) const {
        BiSeries out(trunc());
        for (std::int64_t n = 0; n < trunc(); ++n) {
            const UPoly& p = coef_[static_cast<std::size_t>(n)];
            if (p.empty()) continue;
            for (const auto& [qe, us, c] : f) {
                if (n + qe >= trunc()) continue;
                out.coef_[static_cast<std::size_t>(n + qe)].add_scaled(p, us, c);
            }
        }
        return out;
    }

    BiSeries operator*(const BiSeries& other) const {
        BiSeries out(std::min(trunc(), other.trunc()));
        for (std::int64_t n = 0; n < trunc(); ++n) {
            const UPoly& p = coef_[static_cast<std::size_t>(n)];
            if (p.empty()) continue;
            for (std::int64_t k = 0; n + k < out.trunc() && k < other.trunc(); ++k) {
                const UPoly& qk = other.coef_[static_cast<std::size_t>(k)];
                if (qk.empty()) continue;
                for (std::int64_t m = qk.lo(); m <= qk.hi(); ++m) {
                    Int c = qk.coeff(m);
                    if (!is_zero(c)) out.coef_[static_cast<std::size_t>(n + k)].add_scaled(p, m, c);
                }
            }
        }
        return out;
    }

    BiSeries& operator+=(const BiSeries& other) {
        std::int64_t t = std::min(trunc(), other.trunc());
        for (std::int64_t n = 0; n < t; ++n)
            coef_[static_cast<std::size_t>(n)].add_scaled(other.coef_[static_cast<std::size_t>(n)], 0, Int(1));
        return *this;
    }

private:
    std::vector<UPoly> coef_;
};

} // namespace overq

#endif
