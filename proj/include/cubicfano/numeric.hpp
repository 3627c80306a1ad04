#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace cubicfano {

/// Arbitrary-precision integer and rational types used throughout the
/// library.  No lattice or classification routine ever goes through
/// machine-word arithmetic: degree sequences overflow 64 bits after a
/// handful of steps once the growth rate is near 98.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return Int(boost::multiprecision::numerator(q)); }
inline Int rat_den(const Rat& q) { return Int(boost::multiprecision::denominator(q)); }

inline int sign(const Int& x) { return x.sign(); }
inline int sign(const Rat& x) { return x.sign(); }

/// Floor division, correct for negative numerators (cpp_int's operator/
/// truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("floor_div: division by zero");
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int floor_rat(const Rat& q) { return floor_div(rat_num(q), rat_den(q)); }

/// Integer square root: largest s with s*s <= n.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int s = isqrt(n);
    if (s * s != n) return false;
    if (root) *root = s;
    return true;
}

/// Writes n = c^2 * d with d squarefree.  Trial division up to `bound`;
/// returns nullopt when the squarefree part cannot be certified within
/// the bound (callers then fall back to interval arithmetic).
inline std::optional<std::pair<Int, Int>> squarefree_decompose(Int n, long bound = 1000000) {
    if (n < 0) throw std::domain_error("squarefree_decompose: negative argument");
    if (n == 0) return std::make_pair(Int(0), Int(0));
    Int c = 1;
    for (long p = 2; Int(p) * p * p <= n && p <= bound; ++p) {
        Int pp = Int(p) * p;
        while (n % pp == 0) {
            n /= pp;
            c *= p;
        }
    }
    Int s;
    if (is_perfect_square(n, &s)) {
        c *= s;
        n = 1;
    }
    // Remaining n is squarefree provided it has no prime-square factor
    // above the trial bound; below bound^2 that is automatic.
    if (n > Int(bound) * bound && !is_perfect_square(n)) {
        Int s2 = isqrt(n);
        for (long p = 2; p <= bound && Int(p) <= s2; ++p) {
            if (n % (Int(p) * p) == 0) return std::nullopt;
        }
        if (n > Int(bound) * Int(bound) * Int(bound) * Int(bound)) return std::nullopt;
    }
    return std::make_pair(c, n);
}

inline Int pow10(unsigned digits) {
    Int r = 1;
    for (unsigned i = 0; i < digits; ++i) r *= 10;
    return r;
}

inline Int int_pow(Int base, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

/// Renders v/10^digits as a plain decimal string.
inline std::string scaled_decimal_string(Int v, unsigned digits) {
    bool neg = v < 0;
    if (neg) v = -v;
    std::string s = v.str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

/// Decimal rendering of a rational, truncated toward minus infinity.
inline std::string decimal_string(const Rat& q, unsigned digits) {
    Int scaled = floor_rat(q * Rat(pow10(digits)));
    return scaled_decimal_string(scaled, digits);
}

inline std::string rat_string(const Rat& q) {
    if (rat_den(q) == 1) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

}  // namespace cubicfano
