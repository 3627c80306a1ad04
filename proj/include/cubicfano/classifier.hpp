#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cubicfano/invariants.hpp"

namespace cubicfano::classifier {

using invariants::CurveType;

/// The two admissible lists, split by whether the curve sits in a
/// hyperplane section, plus the two types that always carry a 3-secant.
enum class Membership { l_plane, l_quadric, always_trisecant, none };

inline const std::array<CurveType, 6>& l_plane() {
    static const std::array<CurveType, 6> v{{{0, 1}, {0, 2}, {0, 3}, {1, 3}, {1, 4}, {4, 6}}};
    return v;
}
inline const std::array<CurveType, 4>& l_quadric() {
    static const std::array<CurveType, 4> v{{{0, 4}, {0, 5}, {1, 5}, {2, 6}}};
    return v;
}
inline const std::array<CurveType, 2>& always_trisecant_types() {
    static const std::array<CurveType, 2> v{{{2, 5}, {3, 6}}};
    return v;
}

/// Candidate predicate: 2(d-5) <= g, d <= 6 and g <= tau(d).
inline bool is_candidate(const CurveType& t) {
    if (!t.valid() || t.degree > 6) return false;
    return 2 * (Int(t.degree) - 5) <= Int(t.genus) && Int(t.genus) <= invariants::tau_max_genus(t.degree);
}

inline Membership membership(const CurveType& t) {
    for (const auto& x : l_plane())
        if (x == t) return Membership::l_plane;
    for (const auto& x : l_quadric())
        if (x == t) return Membership::l_quadric;
    for (const auto& x : always_trisecant_types())
        if (x == t) return Membership::always_trisecant;
    return Membership::none;
}

/// All candidate types of degree <= d_max.  Degrees 7 and 8 are swept
/// against the non-degenerate genus bound floor(d(d-5)/6)+1 and come out
/// empty; degrees above 8 are excluded outright (a curve whose blow-up is
/// weak-Fano lies in a 2-dimensional system of hyperquadric sections with
/// no fixed component, forcing d <= 8).
inline std::vector<CurveType> enumerate_candidates(long long d_max) {
    if (d_max < 1) throw std::invalid_argument("enumerate_candidates: d_max must be >= 1");
    std::vector<CurveType> out;
    for (long long d = 1; d <= d_max && d <= 8; ++d) {
        Int hi = (d <= 6) ? invariants::tau_max_genus(d) : floor_div(Int(d) * (Int(d) - 5), 6) + 1;
        for (Int g = 0; g <= hi; ++g) {
            if (2 * (Int(d) - 5) <= g) out.push_back({static_cast<long long>(g), d});
        }
    }
    return out;
}

enum class Flag { yes, no, unknown };

/// Caller-supplied geometric facts about a concrete curve; the library
/// never derives them from equations.
struct GeometricFlags {
    Flag in_hyperplane = Flag::unknown;
    Flag trisecant_in_y = Flag::unknown;
    /// Whether the unique 3-secant line in P^4 of a non-degenerate
    /// rational quintic lies inside the cubic; only meaningful for (0,5).
    Flag p4_trisecant_in_y = Flag::unknown;
};

enum class Status {
    fano,
    weak_fano_small,
    weak_fano_divisorial,
    big_not_nef,
    not_weak_fano,
    invalid_type,
    inconsistent,
    undetermined,
};

enum class LinkKind {
    conic_bundle,
    dp3_fibration,
    dp4_fibration,
    terminal_fano,
    point_in_v14,
    curve_in_v14,
    back_to_y,
    none_divisorial,
};

struct Verdict {
    Status status = Status::undetermined;
    Membership list = Membership::none;
    std::optional<LinkKind> link;  // present only for Fano / weak-Fano-small
    std::optional<Int> secants;
    bool secants_conventional = false;
    std::vector<std::string> needs;  // missing flags when undetermined
    std::vector<std::string> notes;  // forced flags, conventions, recorded mismatches
};

namespace detail {

inline std::optional<LinkKind> link_for(const CurveType& t) {
    if (t == CurveType{0, 1}) return LinkKind::conic_bundle;
    if (t == CurveType{1, 3}) return LinkKind::dp3_fibration;
    if (t == CurveType{0, 2}) return LinkKind::dp4_fibration;
    if (t == CurveType{0, 3}) return LinkKind::terminal_fano;
    if (t == CurveType{0, 4}) return LinkKind::point_in_v14;
    if (t == CurveType{1, 5}) return LinkKind::curve_in_v14;
    if (t == CurveType{0, 5} || t == CurveType{2, 6}) return LinkKind::back_to_y;
    return std::nullopt;
}

}  // namespace detail

/// The full decision procedure: from a curve type and geometric flags to
/// the weak-Fano verdict.  Deterministic and total; contradictory flag
/// combinations surface as Status::inconsistent, missing required facts
/// as Status::undetermined with the needed flags listed.
inline Verdict classify(const CurveType& t, const GeometricFlags& flags = {}) {
    Verdict v;
    if (!t.valid()) {
        v.status = Status::invalid_type;
        return v;
    }
    v.list = membership(t);
    v.secants = invariants::secant_line_count(t);
    v.secants_conventional = invariants::secant_count_is_conventional(t);
    if (v.secants_conventional) v.notes.push_back("secant count 1 is the line-as-its-own-2-secant convention");

    if (v.list == Membership::none) {
        v.status = Status::not_weak_fano;
        return v;
    }

    if (v.list == Membership::always_trisecant) {
        // These types sit in a hyperplane section and always carry a
        // 3-secant line there: -K_X is big but never nef.
        if (flags.in_hyperplane == Flag::no) {
            v.status = Status::inconsistent;
            v.notes.push_back("types (2,5) and (3,6) always lie in a hyperplane section");
            return v;
        }
        if (flags.trisecant_in_y == Flag::no) {
            v.status = Status::inconsistent;
            v.notes.push_back("types (2,5) and (3,6) always carry a 3-secant line");
            return v;
        }
        v.status = Status::big_not_nef;
        v.notes.push_back("3-secant line forced");
        return v;
    }

    if (v.list == Membership::l_plane) {
        if (flags.in_hyperplane == Flag::no) {
            v.status = Status::inconsistent;
            v.notes.push_back("these types always lie in a hyperplane section");
            return v;
        }
        if (flags.trisecant_in_y == Flag::yes) {
            v.status = Status::inconsistent;
            v.notes.push_back("blow-ups of these types are weak-Fano, excluding 3-secant lines");
            return v;
        }
        if (t == CurveType{0, 1} || t == CurveType{1, 3}) {
            v.status = Status::fano;
        } else if (t == CurveType{1, 4} || t == CurveType{4, 6}) {
            v.status = Status::weak_fano_divisorial;
        } else {
            v.status = Status::weak_fano_small;
        }
        if (v.status != Status::weak_fano_divisorial) v.link = detail::link_for(t);
        return v;
    }

    // L_quadric: resolve the effective 3-secant flag.
    bool is05 = (t == CurveType{0, 5});
    Flag secant = flags.trisecant_in_y;
    if (is05 && flags.p4_trisecant_in_y != Flag::unknown && flags.in_hyperplane != Flag::no)
        v.notes.push_back("p4-secant-in-y flag ignored: meaningful only for non-degenerate (0,5)");

    if (flags.in_hyperplane == Flag::yes) {
        if (secant == Flag::no) {
            v.status = Status::inconsistent;
            v.notes.push_back("a hyperplane section containing the curve forces a 3-secant line");
            return v;
        }
        v.status = Status::big_not_nef;
        v.notes.push_back("3-secant line forced by the hyperplane section");
        return v;
    }

    if (flags.in_hyperplane == Flag::no) {
        if (is05) {
            if (flags.p4_trisecant_in_y != Flag::unknown) {
                Flag p4 = flags.p4_trisecant_in_y;
                if (secant != Flag::unknown && secant != p4) {
                    v.status = Status::inconsistent;
                    v.notes.push_back("the unique 3-secant in P^4 decides 3-secants in Y for (0,5)");
                    return v;
                }
                secant = p4;
            }
            // else: stays whatever trisecant_in_y says (possibly unknown)
        } else {
            if (secant == Flag::yes) {
                v.status = Status::inconsistent;
                v.notes.push_back("for these types a 3-secant line forces a hyperplane section");
                return v;
            }
            secant = Flag::no;
        }
    }

    if (secant == Flag::yes) {
        v.status = Status::big_not_nef;
        return v;
    }
    if (secant == Flag::no) {
        v.status = Status::weak_fano_small;
        v.link = detail::link_for(t);
        return v;
    }

    v.status = Status::undetermined;
    if (flags.in_hyperplane == Flag::unknown) v.needs.push_back("in-hyperplane");
    v.needs.push_back(is05 && flags.in_hyperplane == Flag::no ? "p4-secant-in-y" : "three-secant");
    return v;
}

/// One row of the Sarkisov-link summary table.
struct LinkRow {
    CurveType curve_type;
    Membership list;
    Status status;  // Fano / weak-Fano small / weak-Fano divisorial
    std::optional<LinkKind> link;
    Int secant_count;
    bool secant_conventional = false;
};

/// The ten-row link table.  Secant counts are recomputed from the
/// N-formula, never stored.  The L_quadric degree-4 row is emitted as
/// (0,4): the list definition and the N-formula pin that label, and the
/// mismatch against other renderings of this row is recorded as a note
/// on the surrounding report.
inline std::vector<LinkRow> link_table() {
    static const CurveType order[10] = {{0, 1}, {1, 3}, {1, 4}, {4, 6}, {0, 2},
                                        {0, 3}, {0, 4}, {1, 5}, {0, 5}, {2, 6}};
    std::vector<LinkRow> rows;
    for (const CurveType& t : order) {
        GeometricFlags f;
        f.in_hyperplane = (membership(t) == Membership::l_plane) ? Flag::yes : Flag::no;
        f.trisecant_in_y = (membership(t) == Membership::l_plane) ? Flag::unknown : Flag::no;
        Verdict v = classify(t, f);
        LinkRow r;
        r.curve_type = t;
        r.list = v.list;
        r.status = v.status;
        r.link = (v.status == Status::weak_fano_divisorial) ? std::optional<LinkKind>(LinkKind::none_divisorial)
                                                            : v.link;
        r.secant_count = *v.secants;
        r.secant_conventional = v.secants_conventional;
        rows.push_back(std::move(r));
    }
    return rows;
}

inline std::string to_string(Status s) {
    switch (s) {
        case Status::fano: return "Fano";
        case Status::weak_fano_small: return "weak-Fano (small anticanonical morphism)";
        case Status::weak_fano_divisorial: return "weak-Fano (divisorial anticanonical morphism)";
        case Status::big_not_nef: return "-K big but not nef";
        case Status::not_weak_fano: return "not weak-Fano";
        case Status::invalid_type: return "invalid type";
        case Status::inconsistent: return "inconsistent flags";
        case Status::undetermined: return "undetermined";
    }
    return "?";
}

inline std::string to_string(Membership m) {
    switch (m) {
        case Membership::l_plane: return "L_plane";
        case Membership::l_quadric: return "L_quadric";
        case Membership::always_trisecant: return "always-3-secant";
        case Membership::none: return "neither";
    }
    return "?";
}

inline std::string to_string(LinkKind k) {
    switch (k) {
        case LinkKind::conic_bundle: return "conic bundle";
        case LinkKind::dp3_fibration: return "DP3 fibration";
        case LinkKind::dp4_fibration: return "DP4 fibration";
        case LinkKind::terminal_fano: return "terminal Fano";
        case LinkKind::point_in_v14: return "point in V14";
        case LinkKind::curve_in_v14: return "curve in V14";
        case LinkKind::back_to_y: return "back to Y";
        case LinkKind::none_divisorial: return "- (divisorial)";
    }
    return "?";
}

}  // namespace cubicfano::classifier
