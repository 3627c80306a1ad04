#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cubicfano/invariants.hpp"
#include "cubicfano/lattice.hpp"
#include "cubicfano/numeric.hpp"

namespace cubicfano::delpezzo {

using invariants::CurveType;

/// The three blow-up-of-P^2 surface models in play: the cubic surface
/// (6 points), the degree-4 Del Pezzo (5 points), and the 12-point model
/// of a singular hyperquadric section (two families of 6 points each).
enum class Model { cubic_surface, del_pezzo4, singular_quadric };

inline int point_count(Model m) {
    switch (m) {
        case Model::cubic_surface: return 6;
        case Model::del_pezzo4: return 5;
        case Model::singular_quadric: return 12;
    }
    return 0;
}

/// Index at which the second point family starts (12-point model only).
inline int family_split(Model m) { return m == Model::singular_quadric ? 6 : point_count(m); }

/// Class of the strict transform of a plane curve of degree k with
/// multiplicities mults at the blown-up points.
struct PlaneModelClass {
    Int k;
    std::vector<Int> mults;

    PlaneModelClass(Int k_, std::vector<Int> mults_) : k(std::move(k_)), mults(std::move(mults_)) {}
    PlaneModelClass(long k_, std::initializer_list<long> mults_) : k(k_), mults(mults_.begin(), mults_.end()) {}

    friend bool operator==(const PlaneModelClass&, const PlaneModelClass&) = default;
};

inline void require_shape(const PlaneModelClass& c, Model m, const char* what) {
    if (static_cast<int>(c.mults.size()) != point_count(m))
        throw std::invalid_argument(std::string(what) + ": multiplicity count does not match model");
}

/// Arithmetic genus (k-1)(k-2)/2 - sum m_i(m_i-1)/2.  May be negative for
/// reducible classes; no clamping.
inline Int genus(const PlaneModelClass& c) {
    Int g = (c.k - 1) * (c.k - 2) / 2;
    for (const Int& m : c.mults) g -= m * (m - 1) / 2;
    return g;
}

/// Polarization class of the model, as coefficients (k; m_1..m_r).
inline PlaneModelClass polarization(Model m) {
    switch (m) {
        case Model::cubic_surface: return PlaneModelClass(3, std::vector<Int>(6, Int(1)));
        case Model::del_pezzo4: return PlaneModelClass(3, std::vector<Int>(5, Int(1)));
        case Model::singular_quadric: {
            std::vector<Int> mm(12, Int(1));
            for (int i = 0; i < 6; ++i) mm[static_cast<size_t>(i)] = 2;
            return PlaneModelClass(6, std::move(mm));
        }
    }
    throw std::logic_error("polarization: unknown model");
}

/// Intersection pairing in the blow-up lattice (L^2 = 1, E_i^2 = -1).
inline Int pairing(const PlaneModelClass& a, const PlaneModelClass& b) {
    if (a.mults.size() != b.mults.size()) throw std::invalid_argument("pairing: shape mismatch");
    Int r = a.k * b.k;
    for (size_t i = 0; i < a.mults.size(); ++i) r -= a.mults[i] * b.mults[i];
    return r;
}

/// Degree of the class against the model's polarization.
inline Int degree(const PlaneModelClass& c, Model m) {
    require_shape(c, m, "degree");
    return pairing(c, polarization(m));
}

/// Canonical class of the blown-up plane: (-3; -1,...,-1).
inline PlaneModelClass canonical_class(Model m) {
    return PlaneModelClass(Int(-3), std::vector<Int>(static_cast<size_t>(point_count(m)), Int(-1)));
}

/// Adjunction route to the genus: (C.C + C.K)/2 + 1 in the blow-up
/// lattice; agrees with the closed formula for every class.
inline Int genus_by_adjunction(const PlaneModelClass& c, Model m) {
    require_shape(c, m, "genus_by_adjunction");
    Int self = pairing(c, c);
    Int ck = pairing(c, canonical_class(m));
    return (self + ck) / 2 + 1;
}

inline PlaneModelClass add(const PlaneModelClass& a, const PlaneModelClass& b) {
    if (a.mults.size() != b.mults.size()) throw std::invalid_argument("add: shape mismatch");
    std::vector<Int> mm(a.mults);
    for (size_t i = 0; i < mm.size(); ++i) mm[i] += b.mults[i];
    return PlaneModelClass(a.k + b.k, std::move(mm));
}

/// Formal componentwise difference; only the plane degree is required to
/// stay nonnegative (multiplicities may go negative in intermediate
/// computations).
inline PlaneModelClass residual(const PlaneModelClass& total, const PlaneModelClass& part) {
    if (total.mults.size() != part.mults.size()) throw std::invalid_argument("residual: shape mismatch");
    Int k = total.k - part.k;
    if (k < 0) throw std::domain_error("residual: negative resulting plane degree");
    std::vector<Int> mm(total.mults);
    for (size_t i = 0; i < mm.size(); ++i) mm[i] -= part.mults[i];
    return PlaneModelClass(std::move(k), std::move(mm));
}

inline PlaneModelClass scale(const Int& s, const PlaneModelClass& c) {
    std::vector<Int> mm(c.mults);
    for (auto& v : mm) v *= s;
    return PlaneModelClass(s * c.k, std::move(mm));
}

// ---------------------------------------------------------------------------
// Canonical curve models on the three surfaces.  Only the (k; mults) data
// is stored here; genus and degree are always recomputed from the
// formulas above.
// ---------------------------------------------------------------------------

/// The eight curve models on the degree-4 Del Pezzo surface.
inline const std::vector<PlaneModelClass>& dp4_curve_models() {
    static const std::vector<PlaneModelClass> rows = {
        {2, {1, 1, 1, 1, 1}}, {2, {1, 1, 1, 1, 0}}, {2, {1, 1, 1, 0, 0}}, {2, {1, 1, 0, 0, 0}},
        {3, {2, 1, 1, 0, 0}}, {3, {1, 1, 1, 1, 1}}, {3, {1, 1, 1, 1, 0}}, {4, {2, 1, 1, 1, 1}},
    };
    return rows;
}

/// The projection model of a space quintic: the plane cubic image, the
/// projected 3-secant line, the auxiliary conic, and their union.
struct ProjectionRow {
    std::string label;
    PlaneModelClass cls;
};

inline const std::vector<ProjectionRow>& quintic_projection_rows() {
    static const std::vector<ProjectionRow> rows = {
        {"union", {4, {2, 1, 1, 1, 1}}},
        {"cubic image", {3, {2, 1, 1, 0, 0}}},
        {"trisecant image", {1, {0, 0, 0, 1, 1}}},
        {"conic", {2, {1, 1, 1, 1, 1}}},
    };
    return rows;
}

/// The four curve models on the 12-point singular-hyperquadric surface,
/// multiplicities grouped as (first family | second family).
inline const std::vector<PlaneModelClass>& singular_quadric_curve_models() {
    static const std::vector<PlaneModelClass> rows = {
        {1, {0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0}},
        {2, {1, 1, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0}},
        {3, {1, 1, 1, 1, 1, 0, 1, 1, 1, 0, 0, 0}},
        {4, {2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0}},
    };
    return rows;
}

/// Residual system of the hyperquadric-section system through a dp4
/// curve model: 2*polarization - C, with the projected 3-secant line
/// split off as an extra fixed component exactly in the (0,5) case.
struct ResidualSystem {
    PlaneModelClass residual_class;
    std::optional<PlaneModelClass> extra_fixed_part;
};

inline ResidualSystem residual_system(const PlaneModelClass& c) {
    require_shape(c, Model::del_pezzo4, "residual_system");
    PlaneModelClass lambda = scale(Int(2), polarization(Model::del_pezzo4));
    PlaneModelClass r = residual(lambda, c);
    ResidualSystem out{std::move(r), std::nullopt};
    if (genus(c) == 0 && degree(c, Model::del_pezzo4) == 5) {
        // The unique 3-secant line is a fixed component of the residual
        // system for the quintic; its projected class sits in the
        // quintic projection model.
        const PlaneModelClass& line = quintic_projection_rows()[2].cls;
        out.extra_fixed_part = line;
        out.residual_class = residual(out.residual_class, line);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Enumerations.
// ---------------------------------------------------------------------------

namespace detail {

/// Visits all non-increasing multiplicity vectors of the given length
/// with entries in [0, hi].
inline void for_each_sorted(int length, long hi, std::vector<long>& cur,
                            const std::function<void(const std::vector<long>&)>& f) {
    if (static_cast<int>(cur.size()) == length) {
        f(cur);
        return;
    }
    long cap = cur.empty() ? hi : cur.back();
    for (long v = cap; v >= 0; --v) {
        cur.push_back(v);
        for_each_sorted(length, hi, cur, f);
        cur.pop_back();
    }
}

inline PlaneModelClass make_class(long k, const std::vector<long>& m) {
    return PlaneModelClass(Int(k), std::vector<Int>(m.begin(), m.end()));
}

}  // namespace detail

/// All classes kL - sum m_i E_i on the cubic surface, m_1 >= ... >= m_6,
/// that meet every line of the surface at most twice, under the
/// minimal-degree normalisation k >= m_1 + m_2 + m_3.  With the
/// normalisation the constraints reduce to
///   m_i <= 2,  k - m_5 - m_6 <= 2,  2k - (m_2+...+m_6) <= 2,  k <= 6,
/// and the enumeration returns exactly five classes.
inline std::vector<PlaneModelClass> enumerate_cubic_no3secant() {
    std::vector<PlaneModelClass> out;
    for (long k = 1; k <= 6; ++k) {
        std::vector<long> cur;
        detail::for_each_sorted(6, 2, cur, [&](const std::vector<long>& m) {
            if (k < m[0] + m[1] + m[2]) return;
            if (k - m[4] - m[5] > 2) return;
            long tail = m[1] + m[2] + m[3] + m[4] + m[5];
            if (2 * k - tail > 2) return;
            out.push_back(detail::make_class(k, m));
        });
    }
    return out;
}

/// Classes of genus 2 and degree 6 on the cubic surface with
/// 4 <= k <= 8 and sorted multiplicities.  With the normalisation
/// k >= m_1 + m_2 + m_3 there is a single solution (4; 2,1,1,1,1,0);
/// without it the solution set is a strict superset.
inline std::vector<PlaneModelClass> enumerate_26_in_cubic(bool apply_normalisation = true) {
    std::vector<PlaneModelClass> out;
    for (long k = 4; k <= 8; ++k) {
        std::vector<long> cur;
        detail::for_each_sorted(6, 3 * k - 6, cur, [&](const std::vector<long>& m) {
            if (apply_normalisation && k < m[0] + m[1] + m[2]) return;
            PlaneModelClass c = detail::make_class(k, m);
            if (degree(c, Model::cubic_surface) == 6 && genus(c) == 2) out.push_back(std::move(c));
        });
    }
    return out;
}

// ---------------------------------------------------------------------------
// The exceptional-line check on the 6-point model of the blown-up
// hyperplane section W, in the rank-8 lattice (H_S, L, E_1..E_6) with
// H_S^2 = 3, H_S.L = 1, L^2 = -1, E_i^2 = -1.
// ---------------------------------------------------------------------------

struct LineCheckRow {
    std::string label;
    Int hy_degree;      // degree against H_Y = 2H_S - sum E_i
    Int gamma_pairing;  // pairing with Gamma = H_S - sum E_i
    bool is_line_through_vertex;  // both pairings equal 1
};

struct LineCheckReport {
    std::vector<LineCheckRow> rows;
    bool pass = false;
};

inline LineCheckReport exceptional_line_check() {
    using namespace lattice;
    std::vector<std::string> labels = {"H_S", "L", "E1", "E2", "E3", "E4", "E5", "E6"};
    Basis basis(labels);
    IntMatrix form(8);
    form.at(0, 0) = 3;
    form.at(0, 1) = form.at(1, 0) = 1;
    form.at(1, 1) = -1;
    for (int i = 2; i < 8; ++i) form.at(i, i) = -1;
    IntersectionForm f(basis, form);

    auto cls = [&](std::initializer_list<long> v) { return DivisorClass(basis, v); };
    DivisorClass hy = cls({2, 0, -1, -1, -1, -1, -1, -1});
    DivisorClass gamma = cls({1, 0, -1, -1, -1, -1, -1, -1});

    LineCheckReport rep;
    bool ok = true;
    for (int i = 0; i < 6; ++i) {
        std::vector<Int> c(8, Int(0));
        c[static_cast<size_t>(2 + i)] = 1;
        DivisorClass ei(basis, c);
        LineCheckRow row;
        row.label = "E" + std::to_string(i + 1);
        row.hy_degree = pair(f, hy, ei);
        row.gamma_pairing = pair(f, gamma, ei);
        row.is_line_through_vertex = (row.hy_degree == 1 && row.gamma_pairing == 1);
        ok = ok && row.is_line_through_vertex;
        rep.rows.push_back(std::move(row));
    }
    // Negative controls: a line of S through two of the points, and
    // Gamma itself, are not lines of Q.
    DivisorClass line_s = cls({0, 1, -1, -1, 0, 0, 0, 0});
    LineCheckRow neg1{"L-E1-E2", pair(f, hy, line_s), pair(f, gamma, line_s), false};
    neg1.is_line_through_vertex = (neg1.hy_degree == 1 && neg1.gamma_pairing == 1);
    ok = ok && !neg1.is_line_through_vertex && neg1.hy_degree == 0;
    rep.rows.push_back(std::move(neg1));

    LineCheckRow neg2{"Gamma", pair(f, hy, gamma), pair(f, gamma, gamma), false};
    neg2.is_line_through_vertex = (neg2.hy_degree == 1 && neg2.gamma_pairing == 1);
    ok = ok && neg2.hy_degree == 0;  // contracted class
    rep.rows.push_back(std::move(neg2));

    rep.pass = ok;
    return rep;
}

}  // namespace cubicfano::delpezzo
