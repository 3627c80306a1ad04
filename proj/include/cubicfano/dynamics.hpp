#pragma once

#include <array>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubicfano/lattice.hpp"
#include "cubicfano/numeric.hpp"
#include "cubicfano/spectral.hpp"
#include "cubicfano/surd.hpp"
#include "cubicfano/symbolic.hpp"

namespace cubicfano::dynamics {

using lattice::Basis;
using lattice::CurveClass;
using lattice::DivisorClass;
using lattice::IntMatrix;
using lattice::LatticeAction;

// ---------------------------------------------------------------------------
// Bases.
// ---------------------------------------------------------------------------

inline Basis blowup_basis() { return Basis{"H", "E"}; }
inline Basis blowup_curve_basis() { return Basis{"l", "f"}; }
inline Basis two_blowup_basis() { return Basis{"H", "E1", "E2"}; }

inline Basis geiser_basis(int n_points) {
    std::vector<std::string> labels = {"-K"};
    for (int i = 1; i <= n_points; ++i) labels.push_back("E" + std::to_string(i));
    return Basis(labels);
}

/// Pairing of the dual basis (l, f) against (H, E): l.H = 1, f.E = -1,
/// mixed products zero.
inline Int curve_divisor_pairing(const CurveClass& c, const DivisorClass& d) {
    if (c.basis() != blowup_curve_basis() || d.basis() != blowup_basis())
        throw std::invalid_argument("curve_divisor_pairing: expects bases (l,f) and (H,E)");
    return c.coeff(0) * d.coeff(0) - c.coeff(1) * d.coeff(1);
}

// ---------------------------------------------------------------------------
// The anticanonical double-cover involution of the blow-up of a curve of
// type (0,5) or (2,6).
// ---------------------------------------------------------------------------

/// Push-forward of the involution on Pic(X) in the basis (H, E).
/// Built from a = 12 - d in the basis (H, -K) (where the matrix is
/// (-1 0; a 1)) and converted through -K = 2H - E; not hard-coded.
/// The construction is generic in d, but only d in {5,6} arises from an
/// actual involution; other degrees are extrapolations.
struct TauAction {
    LatticeAction action;
    long long degree;
    bool extrapolated;  // true when d is outside {5,6}
};

inline TauAction tau_action(long long d) {
    Int a = 12 - Int(d);
    // In basis (H, -K): H -> -H + a(-K), -K -> -K.
    // Change of basis: a class xH + yE has (H,-K)-coordinates
    // (x + 2y, -y) because E = 2H - (-K).
    IntMatrix t(2);
    t.at(0, 0) = -1;
    t.at(1, 0) = a;
    t.at(1, 1) = 1;
    // P maps (H,E)-coordinates to (H,-K)-coordinates.
    IntMatrix p(2);
    p.at(0, 0) = 1;
    p.at(0, 1) = 2;
    p.at(1, 1) = -1;
    IntMatrix p_inv = p;  // P is an involution: P*P = I.
    IntMatrix m = p_inv * t * p;
    return TauAction{LatticeAction(blowup_basis(), m), d, d != 5 && d != 6};
}

/// (-K_X)^2 = (12-d) l - (22-2d) f in the dual basis (l, f).
inline CurveClass anticanonical_square_class(long long d) {
    return CurveClass(blowup_curve_basis(), {Int(12 - d), -(Int(22) - 2 * Int(d))});
}

/// Image of the ruling fibre: sigma(f) = (12-d) l - (23-2d) f.
inline CurveClass sigma_f_class(long long d) {
    return CurveClass(blowup_curve_basis(), {Int(12 - d), -(Int(23) - 2 * Int(d))});
}

/// Extends a rank-2 action on (H, E) to (H, E1, E2), acting on the chosen
/// exceptional class and fixing the other one.
inline LatticeAction embed_rank3(const LatticeAction& action, int which_exceptional) {
    if (action.basis() != blowup_basis()) throw std::invalid_argument("embed_rank3: expects basis (H, E)");
    if (which_exceptional != 1 && which_exceptional != 2)
        throw std::invalid_argument("embed_rank3: exceptional index must be 1 or 2");
    int e = which_exceptional;  // column/row index of the moved exceptional class
    IntMatrix m = IntMatrix::identity(3);
    m.at(0, 0) = action.matrix().at(0, 0);
    m.at(0, e) = action.matrix().at(0, 1);
    m.at(e, 0) = action.matrix().at(1, 0);
    m.at(e, e) = action.matrix().at(1, 1);
    return LatticeAction(two_blowup_basis(), m);
}

/// The composed pseudo-automorphism action on the two-curve blow-up:
/// embed(tau(d1), 1) o embed(tau(d2), 2).
inline LatticeAction composed_involutions(long long d1, long long d2) {
    return compose(embed_rank3(tau_action(d1).action, 1), embed_rank3(tau_action(d2).action, 2));
}

/// Anticanonical class on the relevant basis: 2H - E, 2H - E1 - E2, or
/// nothing when the basis has no such distinguished class.
inline std::optional<DivisorClass> anticanonical_class(const Basis& b) {
    if (b == blowup_basis()) return DivisorClass(b, {2, -1});
    if (b == two_blowup_basis()) return DivisorClass(b, {2, -1, -1});
    return std::nullopt;
}

/// Result of a dynamical-degree computation: the spectral value plus the
/// empirical degree-sequence ratio used to cross-check it.
struct DynamicalDegree {
    spectral::SpectralRadius spectral;
    std::vector<Int> degree_seq;  // degrees of the iterates against the first basis vector
    std::optional<Rat> empirical_ratio;  // d_{m+1} / d_m at the last step
};

/// Composes a word of lattice actions (applied left to right) and
/// computes its dynamical degree: exactly, via eigenvalue-1 deflation
/// against the anticanonical class when the basis carries one and the
/// rank allows it, and by certified interval otherwise.  When the exact
/// branch yields a value above 1 the empirical ratio of consecutive
/// degrees must agree with it to 10^-6 by step 12; the growth of a
/// parabolic action has not converged by then, so no such check is
/// meaningful there.
inline DynamicalDegree dynamical_degree(const std::vector<LatticeAction>& word) {
    if (word.empty()) throw std::invalid_argument("dynamical_degree: empty word");
    LatticeAction total = word.front();
    for (size_t i = 1; i < word.size(); ++i) total = compose(word[i], total);

    std::optional<DivisorClass> fixed = anticanonical_class(total.basis());
    if (fixed && total.apply(*fixed) != *fixed) fixed = std::nullopt;

    DynamicalDegree out;
    out.spectral = spectral::spectral_radius(total, fixed);

    int n = total.rank();
    std::vector<Int> e1(static_cast<size_t>(n), Int(0));
    e1[0] = 1;
    std::vector<Int> cov(static_cast<size_t>(n), Int(0));
    cov[0] = 1;
    Basis dual = total.basis();  // same rank; labels irrelevant to the pairing below
    out.degree_seq = lattice::degree_sequence(
        total, CurveClass(dual, cov), DivisorClass(total.basis(), e1), 13);

    const Int& dm = out.degree_seq[11];
    const Int& dm1 = out.degree_seq[12];
    if (dm != 0) out.empirical_ratio = Rat(dm1, dm);

    if (out.spectral.is_exact() && *out.spectral.exact > QuadraticSurd(Rat(1)) && out.empirical_ratio) {
        QuadraticSurd err = (QuadraticSurd(*out.empirical_ratio) - *out.spectral.exact).abs();
        if (err > QuadraticSurd(Rat(1, pow10(6))))
            throw std::logic_error("dynamical_degree: empirical ratio disagrees with spectral value");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Geiser involutions on a cubic-surface fibre.
// ---------------------------------------------------------------------------

/// Push-forward of the Geiser involution centred at a point, on the
/// basis (-K, E): the matrix (2 1; -3 -2).  An involution exchanging E
/// with -K - 2E and preserving -K - E.
inline LatticeAction geiser_action() {
    IntMatrix m{{2, 1}, {-3, -2}};
    LatticeAction a(geiser_basis(1), m);
    if (compose(a, a) != LatticeAction::identity(a.basis()))
        throw std::logic_error("geiser_action: not an involution");
    DivisorClass e(a.basis(), {0, 1});
    DivisorClass swapped(a.basis(), {1, -2});  // -K - 2E
    if (a.apply(e) != swapped || a.apply(swapped) != e)
        throw std::logic_error("geiser_action: exceptional class exchange failed");
    DivisorClass preserved(a.basis(), {1, -1});  // -K - E
    if (a.apply(preserved) != preserved)
        throw std::logic_error("geiser_action: preserved class check failed");
    return a;
}

/// Geiser involution at point i, extended to the basis (-K, E1..En) by
/// fixing every other exceptional class.  Ranks above 16 are out of
/// scope, which caps n_points at 15.
inline LatticeAction geiser_embedding(int i, int n_points) {
    if (n_points + 1 > 16) throw std::invalid_argument("geiser_embedding: rank above 16 is unsupported");
    if (i < 1 || i > n_points) throw std::out_of_range("geiser_embedding: point index out of range");
    IntMatrix m = IntMatrix::identity(n_points + 1);
    m.at(0, 0) = 2;
    m.at(0, i) = 1;
    m.at(i, 0) = -3;
    m.at(i, i) = -2;
    return LatticeAction(geiser_basis(n_points), m);
}

/// Product of Geiser embeddings in word order (word[0] acts first).
inline LatticeAction geiser_word_action(const std::vector<int>& word, int n_points) {
    if (word.empty()) throw std::invalid_argument("geiser_word_action: empty word");
    LatticeAction total = geiser_embedding(word[0], n_points);
    for (size_t k = 1; k < word.size(); ++k) total = compose(geiser_embedding(word[k], n_points), total);
    return total;
}

// ---------------------------------------------------------------------------
// Degree-growth simulation for words of Geiser involutions at moving
// points.
// ---------------------------------------------------------------------------

/// One marked base point of the running linear system.
struct MarkedPoint {
    std::string id;     // "p<i>" for a centre, image ids get a step prefix
    Int mult;
    int age = 0;        // steps since this point was marked
    int pattern_point;  // centre index the chain started from, for display
};

/// State after one simulation step, with the per-step invariant checks.
struct DegreeState {
    int step = 0;
    int centre = 0;
    Int degree;
    Int mult_at_centre;
    std::vector<MarkedPoint> marked;
    bool fresh_ok = true;   // centre distinct from the three youngest marked points
    bool tiers_ok = true;   // multiplicity tiers by age: 3d/2, d, 2d/3, 4d/9
    bool growth_ok = true;  // degree >= ceil((3/2)^step)
    bool all_ok() const { return fresh_ok && tiers_ok && growth_ok; }
};

/// Simulates the degree bookkeeping for a repeating pattern of Geiser
/// centres.  The system starts as the anticanonical class; each step at
/// centre p sends degree d with multiplicity m at p to degree 2d - m with
/// multiplicity 3d - 2m at p, and relabels every other marked point by
/// the acting involution (a fresh point under the genericity assumption,
/// so a returning centre finds multiplicity only when it was the centre
/// of the immediately preceding step).
///
/// Checks per step:
///   - freshness: the centre is none of the three youngest marked points;
///   - multiplicity tiers: age 0 <= (3/2)d, age 1 <= d, age 2 <= (2/3)d,
///     age >= 3 <= (4/9)d;
///   - growth: d_k >= ceil((3/2)^k).
inline std::vector<DegreeState> geiser_degree_simulation(const std::vector<int>& pattern, int steps) {
    if (pattern.empty()) throw std::invalid_argument("geiser_degree_simulation: empty pattern");
    if (steps < 1) throw std::invalid_argument("geiser_degree_simulation: steps must be >= 1");
    for (int c : pattern)
        if (c < 1) throw std::invalid_argument("geiser_degree_simulation: centre indices start at 1");

    std::vector<DegreeState> out;
    std::vector<MarkedPoint> marked;
    Int degree = 1;  // -K itself before the first involution
    Int pow2 = 1, pow3 = 1;

    for (int k = 1; k <= steps; ++k) {
        int centre = pattern[static_cast<size_t>((k - 1) % pattern.size())];
        std::string centre_id = "p" + std::to_string(centre);

        DegreeState st;
        st.step = k;
        st.centre = centre;

        // Look up the centre among marked points and check freshness.
        Int m = 0;
        std::vector<MarkedPoint> next;
        for (const MarkedPoint& q : marked) {
            if (q.id == centre_id) {
                m = q.mult;
                if (q.age <= 2) st.fresh_ok = false;
                continue;  // consumed: replaced by the new centre entry
            }
            MarkedPoint moved = q;
            moved.id = "s" + std::to_string(k) + "." + moved.id;
            moved.age += 1;
            next.push_back(std::move(moved));
        }

        Int new_degree = 2 * degree - m;
        Int new_mult = 3 * degree - 2 * m;
        if (new_degree <= 0) st.growth_ok = false;

        MarkedPoint centre_pt{centre_id, new_mult, 0, centre};
        next.insert(next.begin(), centre_pt);

        degree = new_degree;
        marked = std::move(next);

        // Tier bounds, exact in integers.
        for (const MarkedPoint& q : marked) {
            bool ok = true;
            if (q.age == 0) ok = 2 * q.mult <= 3 * degree;
            else if (q.age == 1) ok = q.mult <= degree;
            else if (q.age == 2) ok = 3 * q.mult <= 2 * degree;
            else ok = 9 * q.mult <= 4 * degree;
            st.tiers_ok = st.tiers_ok && ok;
        }

        // degree >= ceil((3/2)^k)  <=>  degree * 2^k >= 3^k.
        pow2 *= 2;
        pow3 *= 3;
        if (degree * pow2 < pow3) st.growth_ok = false;

        st.degree = degree;
        st.mult_at_centre = new_mult;
        st.marked = marked;
        out.push_back(std::move(st));
    }
    return out;
}

/// Strict variant: throws at the first step whose invariants fail.
inline std::vector<DegreeState> geiser_degree_simulation_checked(const std::vector<int>& pattern,
                                                                 int steps) {
    std::vector<DegreeState> states = geiser_degree_simulation(pattern, steps);
    for (const DegreeState& st : states) {
        if (!st.all_ok())
            throw std::runtime_error("geiser_degree_simulation: invariant violated at step " +
                                     std::to_string(st.step));
    }
    return states;
}

/// Degrees of the simulation reproduced in the lattice model: step k
/// blows up a fresh point, so the word is 1,2,...,steps over as many
/// exceptional classes.  Returns the (-K)-coefficients of the iterates.
inline std::vector<Int> geiser_lattice_degrees(int steps) {
    if (steps < 1) throw std::invalid_argument("geiser_lattice_degrees: steps must be >= 1");
    int n = steps;
    std::vector<Int> v(static_cast<size_t>(n) + 1, Int(0));
    v[0] = 1;
    std::vector<Int> degs;
    for (int k = 1; k <= steps; ++k) {
        LatticeAction g = geiser_embedding(k, n);
        v = g.matrix().apply(v);
        degs.push_back(v[0]);
    }
    return degs;
}

// ---------------------------------------------------------------------------
// Conic-bundle involution, symbolically over the base function field.
// ---------------------------------------------------------------------------

using symbolic::Polynomial;
using symbolic::RationalFunction;
using symbolic::VarSet;

/// Quadratic form F = a x^2 + b y^2 + c z^2 + d xy + e xz + f yz in the
/// fibre variables, with coefficients in the base function field, plus a
/// section s = (alpha, beta, gamma).
struct ConicBundleData {
    VarSet base_vars;
    std::array<RationalFunction, 6> coeff;  // a, b, c, d, e, f
    std::array<RationalFunction, 3> section;
};

struct ConicInvolution {
    std::array<RationalFunction, 9> m;  // row-major 3x3
    RationalFunction f;                 // F evaluated at the section

    const RationalFunction& at(int i, int j) const { return m[static_cast<size_t>(i) * 3 + j]; }
};

/// Gram matrix of F (row-major), with halves on the mixed entries.
inline std::array<RationalFunction, 9> gram_matrix(const ConicBundleData& data) {
    const auto& c = data.coeff;
    Rat h(1, 2);
    return {c[0],     h * c[3], h * c[4],
            h * c[3], c[1],     h * c[5],
            h * c[4], h * c[5], c[2]};
}

/// The fibrewise involution fixing the section and preserving the conic:
/// [x:y:z] -> [alpha R - x f : beta R - y f : gamma R - z f] with
/// R = x f_x + y f_y + z f_z.  As a matrix this is
/// s * grad(F)|_s^T - F(s) * Id, which squares to F(s)^2 * Id and
/// satisfies M^T A_F M = F(s)^2 A_F exactly.
inline ConicInvolution conic_bundle_involution(const ConicBundleData& data) {
    const auto& c = data.coeff;
    const auto& s = data.section;
    int nv = data.base_vars.size();
    for (const auto& rf : c)
        if (rf.nvars() != nv) throw std::invalid_argument("conic_bundle_involution: variable-set mismatch");
    for (const auto& rf : s)
        if (rf.nvars() != nv) throw std::invalid_argument("conic_bundle_involution: variable-set mismatch");
    if (s[0].is_zero() && s[1].is_zero() && s[2].is_zero())
        throw std::invalid_argument("conic_bundle_involution: zero section");

    // Nondegenerate conic: det of the Gram matrix must not vanish.
    auto a = gram_matrix(data);
    auto at = [&](int i, int j) { return a[static_cast<size_t>(i) * 3 + j]; };
    RationalFunction det = at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
                           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
                           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    if (det.is_zero()) throw std::domain_error("conic_bundle_involution: degenerate quadratic form");

    RationalFunction f = c[0] * s[0] * s[0] + c[1] * s[1] * s[1] + c[2] * s[2] * s[2] +
                         c[3] * s[0] * s[1] + c[4] * s[0] * s[2] + c[5] * s[1] * s[2];
    if (f.is_zero()) throw std::domain_error("conic_bundle_involution: section lies on the bundle");

    std::array<RationalFunction, 3> grad = {
        Rat(2) * c[0] * s[0] + c[3] * s[1] + c[4] * s[2],
        Rat(2) * c[1] * s[1] + c[3] * s[0] + c[5] * s[2],
        Rat(2) * c[2] * s[2] + c[4] * s[0] + c[5] * s[1],
    };

    ConicInvolution out{{RationalFunction(nv), RationalFunction(nv), RationalFunction(nv),
                         RationalFunction(nv), RationalFunction(nv), RationalFunction(nv),
                         RationalFunction(nv), RationalFunction(nv), RationalFunction(nv)},
                        f};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            RationalFunction v = s[static_cast<size_t>(i)] * grad[static_cast<size_t>(j)];
            if (i == j) v = v - f;
            out.m[static_cast<size_t>(i) * 3 + j] = v;
        }
    return out;
}

}  // namespace cubicfano::dynamics
