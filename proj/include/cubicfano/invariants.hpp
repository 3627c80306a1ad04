#pragma once

#include <optional>
#include <stdexcept>

#include "cubicfano/numeric.hpp"

namespace cubicfano::invariants {

/// A smooth curve type on a cubic threefold: genus and degree.
struct CurveType {
    long long genus = 0;
    long long degree = 1;

    bool valid() const { return genus >= 0 && degree >= 1; }
    friend bool operator==(const CurveType&, const CurveType&) = default;
    friend auto operator<=>(const CurveType&, const CurveType&) = default;
};

/// (-K_X)^3 = 22 - 4d + 2g for the blow-up of a type-(g,d) curve.
/// Positivity is equivalent to 2(d-5) <= g; both forms are kept in sync.
inline Int anticanonical_cube(const CurveType& t) {
    Int v = 22 - 4 * Int(t.degree) + 2 * Int(t.genus);
    bool pos_formula = v > 0;
    bool pos_inequality = 2 * (Int(t.degree) - 5) <= Int(t.genus);
    if (pos_formula != pos_inequality)
        throw std::logic_error("anticanonical_cube: positivity forms disagree");
    return v;
}

/// K_X^2 . E = 2 + 2d - 2g.
inline Int k2e(const CurveType& t) { return 2 + 2 * Int(t.degree) - 2 * Int(t.genus); }

/// Number of 2-secant lines, counted with multiplicity:
/// N = 5d(d-3)/2 + 6 - 6g.  Valid as a count only when finite; a negative
/// value is reported as inapplicable rather than as a count.
inline std::optional<Int> secant_line_count(const CurveType& t) {
    Int dd = Int(t.degree) * (Int(t.degree) - 3);  // always even
    Int n = 5 * dd / 2 + 6 - 6 * Int(t.genus);
    if (n < 0) return std::nullopt;
    return n;
}

/// For d = 1 the count 1 is a convention: the line is its own 2-secant.
inline bool secant_count_is_conventional(const CurveType& t) {
    return t.degree == 1 && t.genus == 0;
}

/// Lower bound on the projective dimension of the system of hyperplanes
/// through a type-(g,d) curve in P^4.  Two hypothesis ranges apply; when
/// neither holds the result carries no information.
struct HyperplaneBound {
    enum class Case { large_degree, near_canonical, none };
    Case which = Case::none;
    std::optional<Int> bound;
};

inline HyperplaneBound dim_hyperplanes_through(const CurveType& t) {
    Int g(t.genus), d(t.degree);
    HyperplaneBound r;
    if (d > 2 * g - 2) {
        r.which = HyperplaneBound::Case::large_degree;
        r.bound = 3 - d + g;
    } else if (g >= 2 && 2 * g - 4 <= d && d <= 2 * g - 2) {
        // The stated range is taken as 2g-4 <= d <= 2g-2: the argument
        // runs on deg(K_C - D) in {0,1,2}.
        r.which = HyperplaneBound::Case::near_canonical;
        r.bound = 2 - d + g;
    }
    return r;
}

/// Lower bound 13 - 2d + g on the projective dimension of quadrics
/// through the curve; requires d > g - 1.
inline std::optional<Int> dim_quadrics_through(const CurveType& t) {
    Int g(t.genus), d(t.degree);
    if (!(d > g - 1)) return std::nullopt;
    return 13 - 2 * d + g;
}

/// Castelnuovo bound for non-degenerate smooth curves in P^n, n in {3,4}.
/// Computed from the Euclidean division d-1 = (n-1)m + eps and checked
/// against the closed floor form.
inline Int castelnuovo_bound(long long degree, int n) {
    if (degree < 1) throw std::invalid_argument("castelnuovo_bound: degree must be >= 1");
    if (n != 3 && n != 4) throw std::invalid_argument("castelnuovo_bound: n must be 3 or 4");
    Int d(degree);
    Int m = (d - 1) / (n - 1);
    Int eps = (d - 1) % (n - 1);
    Int bound = Int(n - 1) * m * (m - 1) / 2 + m * eps;
    Int closed = (n == 3) ? floor_div(d * d, 4) - d + 1 : floor_div(d * (d - 5), 6) + 1;
    if (bound != closed) throw std::logic_error("castelnuovo_bound: closed form mismatch");
    return bound;
}

/// Maximal genus tau(d) of a smooth curve of degree d <= 6 on a smooth
/// cubic threefold.
inline Int tau_max_genus(long long d) {
    static constexpr long table[6] = {0, 0, 1, 1, 2, 4};
    if (d < 1 || d > 6) throw std::out_of_range("tau_max_genus: degree out of range 1..6");
    return Int(table[d - 1]);
}

/// Bundle of the closed-form invariants of the blow-up.
struct BlowupInvariants {
    Int anticanonical_cube;
    Int k2e;
    std::optional<Int> secant_count;  // nullopt: N < 0, formula inapplicable
    bool secant_conventional = false;
    std::optional<Int> dim_anticanonical;  // nullopt: (-K)^3 <= 0
};

inline BlowupInvariants blowup_invariants(const CurveType& t) {
    BlowupInvariants b;
    b.anticanonical_cube = anticanonical_cube(t);
    b.k2e = k2e(t);
    b.secant_count = secant_line_count(t);
    b.secant_conventional = secant_count_is_conventional(t);
    if (b.anticanonical_cube > 0) b.dim_anticanonical = b.anticanonical_cube / 2 + 2;
    return b;
}

}  // namespace cubicfano::invariants
