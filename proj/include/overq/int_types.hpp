#ifndef OVERQ_INT_TYPES_HPP
#define OVERQ_INT_TYPES_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <string>

namespace overq {

// Exact coefficient domains. Integers by default; rationals only where a
// division is forced (series inversion with non-unit lead, N - pbar/t).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

inline bool is_zero(const Int& v) { return v.is_zero(); }
inline bool is_zero(const Rat& v) { return v.is_zero(); }

inline std::string to_decimal(const Int& v) { return v.str(); }
inline std::string to_decimal(const Rat& v) { return v.str(); }

inline Int int_from_decimal(const std::string& s) { return Int(s); }
inline Rat rat_from_decimal(const std::string& s) { return Rat(s); }

// Euclidean residue in [0, m).
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// Inverse of a mod m (m >= 1, gcd(a,m) = 1).
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    if (m == 1) return 0;
    std::int64_t t = 0, newt = 1, r = m, newr = mod_floor(a, m);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    return mod_floor(t, m);
}

// Kronecker symbol (a|n), the Jacobi symbol extended to all integers.
inline int kronecker(std::int64_t a, std::int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a % 2 == 0) && (n % 2 == 0)) return 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    // strip 2s from n; (a|2) = (2|a) table
    while (n % 2 == 0) {
        n /= 2;
        std::int64_t r = mod_floor(a, 8);
        if (r == 3 || r == 5) result = -result;
    }
    a = mod_floor(a, n);
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            std::int64_t r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a = mod_floor(a, n);
    }
    return n == 1 ? result : 0;
}

} // namespace overq

#endif
