#ifndef OVERQ_FRAC_SERIES_HPP
#define OVERQ_FRAC_SERIES_HPP

// Truncated formal series on a fractional exponent lattice (1/denom)*Z with
// exact coefficients. A series holds terms c * q^{e/denom} for integer
// exponent-numerators e < trunc; everything at or beyond trunc/denom is
// unknown. Arithmetic rescales both operands to the lcm lattice first and the
// product keeps the minimum of the rescaled truncs.

#include <cstdint>
#include <map>
#include <utility>

#include "overq/errors.hpp"
#include "overq/int_types.hpp"

namespace overq {

template <typename Coef>
class FracSeries {
public:
    using coef_type = Coef;
    using term_map = std::map<std::int64_t, Coef>;

    FracSeries() = default;

    /// Zero series on the given lattice, valid below trunc/denom.
    FracSeries(std::int64_t denom, std::int64_t trunc) : denom_(denom), trunc_(trunc) {
        if (denom_ <= 0) throw BadParams("FracSeries denom must be positive");
    }

    static FracSeries zero(std::int64_t denom, std::int64_t trunc) { return FracSeries(denom, trunc); }

    static FracSeries one(std::int64_t denom, std::int64_t trunc) {
        FracSeries s(denom, trunc);
        s.set(0, Coef(1));
        return s;
    }

    /// c * q^{e/denom}
    static FracSeries monomial(Coef c, std::int64_t e, std::int64_t denom, std::int64_t trunc) {
        FracSeries s(denom, trunc);
        s.set(e, std::move(c));
        return s;
    }

    std::int64_t denom() const { return denom_; }
    std::int64_t trunc() const { return trunc_; }
    const term_map& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void set(std::int64_t e, Coef c) {
        if (e >= trunc_) return;
        if (is_zero(c)) terms_.erase(e);
        else terms_[e] = std::move(c);
    }

    void add_term(std::int64_t e, const Coef& c) {
        if (e >= trunc_ || is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    /// Coefficient of q^{e/denom()} (exponent numerator on this lattice).
    Coef coeff(std::int64_t e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Coef(0) : it->second;
    }

    /// Coefficient of q^{num/den} for an arbitrary rational exponent.
    Coef coeff_at(std::int64_t num, std::int64_t den) const {
        if (den <= 0) throw BadParams("exponent denominator must be positive");
        // num/den = e/denom_  =>  e = num*denom_/den must be integral
        std::int64_t g = gcd64(std::abs(num) == 0 ? den : std::abs(num), den);
        (void)g;
        if ((num * denom_) % den != 0) return Coef(0);
        return coeff(num * denom_ / den);
    }

    /// Exponent numerator of the lowest-order term. Throws ZeroSeries if none.
    std::int64_t leading_exponent() const {
        if (terms_.empty()) throw ZeroSeries("no nonzero term below trunc");
        return terms_.begin()->first;
    }

    /// Same series on a finer lattice; new_denom must be a multiple of denom().
    FracSeries rescaled(std::int64_t new_denom) const {
        if (new_denom % denom_ != 0)
            throw LatticeMismatch("rescale target is not a multiple of the lattice denom");
        std::int64_t f = new_denom / denom_;
        FracSeries out(new_denom, trunc_ * f);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e * f, c);
        return out;
    }

    /// Reduce the lattice by the gcd of all exponent numerators and denom.
    FracSeries normalized() const {
        std::int64_t g = denom_;
        for (const auto& [e, c] : terms_) g = gcd64(g, std::abs(e));
        if (g <= 1) return *this;
        // trunc shrinks conservatively: largest T' with T'*g <= trunc
        FracSeries out(denom_ / g, trunc_ >= 0 ? trunc_ / g : -((-trunc_ + g - 1) / g));
        for (const auto& [e, c] : terms_) out.terms_.emplace(e / g, c);
        return out;
    }

    FracSeries operator-() const {
        FracSeries out(denom_, trunc_);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }

    friend FracSeries operator+(const FracSeries& a, const FracSeries& b) {
        auto [x, y] = common_lattice(a, b);
        FracSeries out(x.denom_, std::min(x.trunc_, y.trunc_));
        out.terms_ = x.terms_;
        out.clip();
        for (const auto& [e, c] : y.terms_) out.add_term(e, c);
        return out;
    }

    friend FracSeries operator-(const FracSeries& a, const FracSeries& b) { return a + (-b); }

    friend FracSeries operator*(const FracSeries& a, const FracSeries& b) {
        auto [x, y] = common_lattice(a, b);
        FracSeries out(x.denom_, std::min(x.trunc_, y.trunc_));
        for (const auto& [ea, ca] : x.terms_) {
            for (const auto& [eb, cb] : y.terms_) {
                std::int64_t e = ea + eb;
                if (e >= out.trunc_) break;  // eb ascending
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    friend FracSeries operator*(const Coef& s, const FracSeries& a) {
        FracSeries out(a.denom_, a.trunc_);
        if (is_zero(s)) return out;
        for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, s * c);
        return out;
    }

    /// Multiplicative inverse up to truncation. The leading coefficient must
    /// be a unit of the coefficient ring (+-1 for Int; any nonzero Rat).
    FracSeries invert() const {
        std::int64_t e0 = leading_exponent();
        Coef c0 = terms_.begin()->second;
        require_unit(c0);
        // a = c0 q^{e0} (1 + r); 1/a is valid strictly below (trunc - 2 e0)/denom
        std::int64_t span = trunc_ - e0;  // known length of (1 + r)
        FracSeries out(denom_, trunc_ - 2 * e0);
        if (span <= 0) return out;
        std::map<std::int64_t, Coef> b;  // inverse of (1 + r), exponents in [0, span)
        b[0] = Coef(1);
        // b_n = -sum_{0 < f <= n} a_f b_{n-f}, with a_f = coeff(e0+f)/c0
        for (std::int64_t n = 1; n < span; ++n) {
            Coef acc(0);
            for (auto it = terms_.upper_bound(e0); it != terms_.end(); ++it) {
                std::int64_t f = it->first - e0;
                if (f > n) break;
                auto jt = b.find(n - f);
                if (jt != b.end()) acc += (it->second) * jt->second;
            }
            if (!is_zero(acc)) b[n] = -unit_div(acc, c0);
        }
        for (auto& [n, v] : b) {
            if (n == 0) v = unit_div(v, c0);
            out.set(n - e0, std::move(v));
        }
        return out;
    }

    friend bool operator==(const FracSeries& a, const FracSeries& b) {
        auto [x, y] = common_lattice(a, b);
        std::int64_t t = std::min(x.trunc_, y.trunc_);
        x.trunc_ = y.trunc_ = t;
        x.clip();
        y.clip();
        return x.terms_ == y.terms_;
    }

private:
    static std::pair<FracSeries, FracSeries> common_lattice(const FracSeries& a, const FracSeries& b) {
        if (a.denom_ == b.denom_) return {a, b};
        std::int64_t l = lcm64(a.denom_, b.denom_);
        return {a.rescaled(l), b.rescaled(l)};
    }

    void clip() { terms_.erase(terms_.lower_bound(trunc_), terms_.end()); }

    static void require_unit(const Int& c) {
        if (c != 1 && c != -1)
            throw BadParams("invert over Int needs a +-1 leading coefficient; promote to Rat");
    }
    static void require_unit(const Rat&) {}
    static Int unit_div(const Int& a, const Int& u) { return u == 1 ? a : -a; }
    static Rat unit_div(const Rat& a, const Rat& u) { return a / u; }

    std::int64_t denom_ = 1;
    std::int64_t trunc_ = 0;
    term_map terms_;
};

using ZSeries = FracSeries<Int>;
using QSeries = FracSeries<Rat>;

/// Exact promotion of an integer series to rational coefficients.
inline QSeries to_rational(const ZSeries& s) {
    QSeries out(s.denom(), s.trunc());
    for (const auto& [e, c] : s.terms()) out.set(e, Rat(c));
    return out;
}

} // namespace overq

#endif
