#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubicfano/lattice.hpp"
#include "cubicfano/numeric.hpp"
#include "cubicfano/surd.hpp"

namespace cubicfano::spectral {

/// Characteristic polynomial of an integer matrix, ascending coefficients,
/// monic of degree n.  Faddeev-LeVerrier; all divisions are exact.
inline std::vector<Int> char_poly(const lattice::IntMatrix& a) {
    int n = a.size();
    std::vector<Int> c(static_cast<size_t>(n) + 1, Int(0));
    c[static_cast<size_t>(n)] = 1;
    lattice::IntMatrix m = a;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            // m <- a * (m + c_{n-k+1} * I)
            lattice::IntMatrix t = m;
            for (int i = 0; i < n; ++i) t.at(i, i) += c[static_cast<size_t>(n - k + 1)];
            m = a * t;
        }
        Int tr = m.trace();
        if (tr % k != 0) throw std::logic_error("char_poly: inexact division");
        c[static_cast<size_t>(n - k)] = -tr / k;
    }
    return c;
}

/// Evaluates an ascending-coefficient polynomial at a rational point.
inline Rat eval_poly(const std::vector<Int>& c, const Rat& x) {
    Rat r = 0;
    for (size_t i = c.size(); i-- > 0;) r = r * x + Rat(c[i]);
    return r;
}

namespace detail {

inline void trim(std::vector<Rat>& c) {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
}

/// Schur-Cohn test: true iff every root of c (ascending coefficients,
/// not identically zero) lies strictly inside the unit disk.  Exact over
/// the rationals; an equality |a0| = |an| at any stage reports false,
/// which is the correct answer whenever no stage degenerates and a safe
/// (conservative) answer otherwise.
inline bool roots_in_open_unit_disk(std::vector<Rat> c) {
    trim(c);
    while (c.size() > 1) {
        size_t n = c.size() - 1;
        Rat a0 = c.front(), an = c.back();
        if (boost::multiprecision::abs(a0) >= boost::multiprecision::abs(an)) return false;
        std::vector<Rat> q(n);  // (an*c - a0*reverse(c)) / z, degree exactly n-1
        for (size_t i = 1; i <= n; ++i) q[i - 1] = an * c[i] - a0 * c[n - i];
        c = std::move(q);
        trim(c);
    }
    return true;
}

}  // namespace detail

/// True iff all roots of the integer polynomial lie in the open disk of
/// rational radius r.
inline bool roots_in_open_disk(const std::vector<Int>& c, const Rat& r) {
    if (r <= 0) return false;
    std::vector<Rat> s(c.size());
    Rat p = 1;
    for (size_t i = 0; i < c.size(); ++i) {
        s[i] = Rat(c[i]) * p;
        p *= r;
    }
    return detail::roots_in_open_unit_disk(std::move(s));
}

struct RadiusInterval {
    Rat lo, hi;  // max root modulus lies in [lo, hi]
    Rat width() const { return hi - lo; }
    Rat midpoint() const { return (lo + hi) / 2; }
    bool contains(const QuadraticSurd& v) const {
        return v >= QuadraticSurd(lo) && v <= QuadraticSurd(hi);
    }
};

/// Certified enclosure of the maximal root modulus, by bisection on the
/// exact disk test.  Default width 10^-13 so that a 12-digit decimal of
/// either endpoint is trustworthy.
inline RadiusInterval certified_root_radius(const std::vector<Int>& c,
                                            Rat width = Rat(1, pow10(13))) {
    std::vector<Int> cc = c;
    while (cc.size() > 1 && cc.back() == 0) cc.pop_back();
    if (cc.size() <= 1) return {Rat(0), Rat(0)};
    Int lead = cc.back();
    Rat cauchy = 0;
    for (size_t i = 0; i + 1 < cc.size(); ++i) {
        Rat m = boost::multiprecision::abs(Rat(cc[i], lead));
        if (m > cauchy) cauchy = m;
    }
    Rat lo = 0, hi = cauchy + 1;
    while (hi - lo > width) {
        Rat mid = (lo + hi) / 2;
        if (roots_in_open_disk(cc, mid)) hi = mid;
        else lo = mid;
    }
    return {lo, hi};
}

/// Result of a spectral-radius computation: either an exact quadratic
/// surd (when eigenvalue-1 deflation applies) or a certified interval.
struct SpectralRadius {
    std::optional<QuadraticSurd> exact;
    RadiusInterval interval;  // always filled; brackets the exact value when present

    bool is_exact() const { return exact.has_value(); }
    std::string decimal(unsigned digits) const {
        if (exact) return exact->decimal(digits);
        return decimal_string(interval.midpoint(), digits);
    }
};

/// Spectral radius of a lattice action.  With a supplied fixed vector and
/// rank <= 3, the eigenvalue-1 factor is deflated and the residual
/// quadratic lambda^2 - t*lambda + det solved exactly; otherwise a
/// certified interval of width <= 10^-12 is produced from the
/// characteristic polynomial.
inline SpectralRadius spectral_radius(const lattice::LatticeAction& a,
                                      const std::optional<lattice::DivisorClass>& fixed = std::nullopt) {
    std::vector<Int> cp = char_poly(a.matrix());
    SpectralRadius out;
    out.interval = certified_root_radius(cp, Rat(1, pow10(13)));

    if (fixed) {
        if (a.apply(*fixed) != *fixed)
            throw std::invalid_argument("spectral_radius: supplied vector is not fixed by the action");
        bool zero = true;
        for (const Int& v : fixed->coeffs()) zero = zero && v == 0;
        if (zero) throw std::invalid_argument("spectral_radius: fixed vector is zero");
    }

    int n = a.rank();
    if (fixed && n <= 3) {
        QuadraticSurd radius;
        if (n == 1) {
            radius = QuadraticSurd(Rat(a.matrix().at(0, 0))).abs();
        } else if (n == 2) {
            // char = (x - 1)(x - det)
            Int other = a.det();
            radius = QuadraticSurd(Rat(1));
            QuadraticSurd o = QuadraticSurd(Rat(other)).abs();
            if (o > radius) radius = o;
        } else {
            // char = (x - 1)(x^2 - t x + p) with t = trace - 1, p = det
            Int t = a.matrix().trace() - 1;
            Int p = a.det();
            Int disc = t * t - 4 * p;
            radius = QuadraticSurd(Rat(1));
            if (disc >= 0) {
                auto sf = squarefree_decompose(disc);
                if (!sf) {
                    // Radicand not certifiable: keep the interval result.
                    return out;
                }
                QuadraticSurd root1(Rat(t, 2), Rat(sf->first, 2), sf->second);
                QuadraticSurd root2(Rat(t, 2), -Rat(sf->first, 2), sf->second);
                if (root1.abs() > radius) radius = root1.abs();
                if (root2.abs() > radius) radius = root2.abs();
            } else {
                // Complex pair of modulus sqrt(p).
                if (!squarefree_decompose(p)) return out;
                QuadraticSurd mod(Rat(0), Rat(1), p);  // sqrt(p), normalised internally
                if (mod > radius) radius = mod;
            }
        }
        if (!out.interval.contains(radius))
            throw std::logic_error("spectral_radius: exact value escaped its certified interval");
        out.exact = radius;
    }
    return out;
}

}  // namespace cubicfano::spectral
