#pragma once

#include <json.hpp>

#include <limits>
#include <string>
#include <vector>

#include "cubicfano/classifier.hpp"
#include "cubicfano/delpezzo.hpp"
#include "cubicfano/dynamics.hpp"
#include "cubicfano/lattice.hpp"
#include "cubicfano/spectral.hpp"
#include "cubicfano/surd.hpp"
#include "cubicfano/table_checks.hpp"

// JSON wire formats.  Big integers are emitted as JSON numbers while they
// fit in 64 bits and as decimal strings beyond that; readers accept both.

namespace cubicfano::jsonio {

using nlohmann::json;

inline json int_to_json(const Int& v) {
    static const Int lo = Int(std::numeric_limits<long long>::min());
    static const Int hi = Int(std::numeric_limits<long long>::max());
    if (v >= lo && v <= hi) return static_cast<long long>(v);
    return v.str();
}

inline Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected integer or integer string");
}

inline json int_vector_to_json(const std::vector<Int>& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

inline std::vector<Int> int_vector_from_json(const json& j) {
    std::vector<Int> v;
    for (const auto& x : j) v.push_back(int_from_json(x));
    return v;
}

// --- lattice -------------------------------------------------------------

inline json to_json(const lattice::Basis& b) { return json(b.labels()); }
inline lattice::Basis basis_from_json(const json& j) {
    return lattice::Basis(j.get<std::vector<std::string>>());
}

inline json to_json(const lattice::DivisorClass& c) {
    return json{{"basis", to_json(c.basis())}, {"coeffs", int_vector_to_json(c.coeffs())}};
}
inline lattice::DivisorClass divisor_class_from_json(const json& j) {
    return lattice::DivisorClass(basis_from_json(j.at("basis")), int_vector_from_json(j.at("coeffs")));
}

inline json to_json(const lattice::CurveClass& c) {
    return json{{"basis", to_json(c.basis())}, {"coeffs", int_vector_to_json(c.coeffs())}};
}
inline lattice::CurveClass curve_class_from_json(const json& j) {
    return lattice::CurveClass(basis_from_json(j.at("basis")), int_vector_from_json(j.at("coeffs")));
}

inline json matrix_rows_to_json(const lattice::IntMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(int_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}
inline lattice::IntMatrix matrix_from_json(const json& j) {
    int n = static_cast<int>(j.size());
    lattice::IntMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) m.at(i, k) = int_from_json(j.at(i).at(k));
    return m;
}

inline json to_json(const lattice::IntersectionForm& f) {
    return json{{"basis", to_json(f.basis())}, {"matrix", matrix_rows_to_json(f.matrix())}};
}
inline lattice::IntersectionForm intersection_form_from_json(const json& j) {
    return lattice::IntersectionForm(basis_from_json(j.at("basis")), matrix_from_json(j.at("matrix")));
}

inline json to_json(const lattice::LatticeAction& a) {
    return json{{"basis", to_json(a.basis())}, {"matrix", matrix_rows_to_json(a.matrix())}};
}
inline lattice::LatticeAction lattice_action_from_json(const json& j) {
    return lattice::LatticeAction(basis_from_json(j.at("basis")), matrix_from_json(j.at("matrix")));
}

// --- surds and spectral results -------------------------------------------

inline json to_json(const QuadraticSurd& s) {
    return json{{"a", rat_string(s.a())}, {"b", rat_string(s.b())}, {"D", int_to_json(s.radicand())}};
}
inline QuadraticSurd surd_from_json(const json& j) {
    return QuadraticSurd(rat_from_string(j.at("a").get<std::string>()),
                         rat_from_string(j.at("b").get<std::string>()),
                         int_from_json(j.at("D")));
}

inline json to_json(const spectral::RadiusInterval& iv) {
    return json{{"lo", rat_string(iv.lo)}, {"hi", rat_string(iv.hi)}};
}
inline spectral::RadiusInterval interval_from_json(const json& j) {
    return {rat_from_string(j.at("lo").get<std::string>()), rat_from_string(j.at("hi").get<std::string>())};
}

inline json to_json(const spectral::SpectralRadius& r) {
    json j{{"interval", to_json(r.interval)}, {"decimal", r.decimal(15)}};
    if (r.exact) j["exact"] = to_json(*r.exact);
    return j;
}

// --- invariants --------------------------------------------------------------

inline json to_json(const invariants::BlowupInvariants& b) {
    json j{{"anticanonical_cube", int_to_json(b.anticanonical_cube)}, {"k2e", int_to_json(b.k2e)}};
    j["secants"] = b.secant_count ? int_to_json(*b.secant_count) : json(nullptr);
    if (b.secant_conventional) j["secants_conventional"] = true;
    j["dim_anticanonical"] = b.dim_anticanonical ? int_to_json(*b.dim_anticanonical) : json(nullptr);
    return j;
}

// --- classifier ------------------------------------------------------------

inline json to_json(const classifier::CurveType& t) { return json{{"g", t.genus}, {"d", t.degree}}; }
inline classifier::CurveType curve_type_from_json(const json& j) {
    return {j.at("g").get<long long>(), j.at("d").get<long long>()};
}

inline std::string status_key(classifier::Status s) {
    using classifier::Status;
    switch (s) {
        case Status::fano: return "fano";
        case Status::weak_fano_small: return "weak_fano_small";
        case Status::weak_fano_divisorial: return "weak_fano_divisorial";
        case Status::big_not_nef: return "big_not_nef";
        case Status::not_weak_fano: return "not_weak_fano";
        case Status::invalid_type: return "invalid_type";
        case Status::inconsistent: return "inconsistent";
        case Status::undetermined: return "undetermined";
    }
    return "?";
}
inline classifier::Status status_from_key(const std::string& k) {
    using classifier::Status;
    for (Status s : {Status::fano, Status::weak_fano_small, Status::weak_fano_divisorial,
                     Status::big_not_nef, Status::not_weak_fano, Status::invalid_type,
                     Status::inconsistent, Status::undetermined})
        if (status_key(s) == k) return s;
    throw std::invalid_argument("unknown status '" + k + "'");
}

inline std::string membership_key(classifier::Membership m) {
    using classifier::Membership;
    switch (m) {
        case Membership::l_plane: return "l_plane";
        case Membership::l_quadric: return "l_quadric";
        case Membership::always_trisecant: return "always_trisecant";
        case Membership::none: return "none";
    }
    return "?";
}
inline classifier::Membership membership_from_key(const std::string& k) {
    using classifier::Membership;
    for (Membership m : {Membership::l_plane, Membership::l_quadric, Membership::always_trisecant,
                         Membership::none})
        if (membership_key(m) == k) return m;
    throw std::invalid_argument("unknown membership '" + k + "'");
}

inline std::string link_key(classifier::LinkKind k) {
    using classifier::LinkKind;
    switch (k) {
        case LinkKind::conic_bundle: return "conic_bundle";
        case LinkKind::dp3_fibration: return "dp3_fibration";
        case LinkKind::dp4_fibration: return "dp4_fibration";
        case LinkKind::terminal_fano: return "terminal_fano";
        case LinkKind::point_in_v14: return "point_in_v14";
        case LinkKind::curve_in_v14: return "curve_in_v14";
        case LinkKind::back_to_y: return "back_to_y";
        case LinkKind::none_divisorial: return "none_divisorial";
    }
    return "?";
}
inline classifier::LinkKind link_from_key(const std::string& k) {
    using classifier::LinkKind;
    for (LinkKind l : {LinkKind::conic_bundle, LinkKind::dp3_fibration, LinkKind::dp4_fibration,
                       LinkKind::terminal_fano, LinkKind::point_in_v14, LinkKind::curve_in_v14,
                       LinkKind::back_to_y, LinkKind::none_divisorial})
        if (link_key(l) == k) return l;
    throw std::invalid_argument("unknown link kind '" + k + "'");
}

inline json to_json(const classifier::Verdict& v, bool metadata = true) {
    json j{{"status", status_key(v.status)}, {"list", membership_key(v.list)}};
    if (v.link) j["link"] = link_key(*v.link);
    if (v.secants) j["secants"] = int_to_json(*v.secants);
    if (v.secants_conventional) j["secants_conventional"] = true;
    if (!v.needs.empty()) j["needs"] = v.needs;
    if (metadata && !v.notes.empty()) j["notes"] = v.notes;
    return j;
}
inline classifier::Verdict verdict_from_json(const json& j) {
    classifier::Verdict v;
    v.status = status_from_key(j.at("status").get<std::string>());
    v.list = membership_from_key(j.at("list").get<std::string>());
    if (j.contains("link")) v.link = link_from_key(j.at("link").get<std::string>());
    if (j.contains("secants")) v.secants = int_from_json(j.at("secants"));
    if (j.contains("secants_conventional")) v.secants_conventional = j.at("secants_conventional").get<bool>();
    if (j.contains("needs")) v.needs = j.at("needs").get<std::vector<std::string>>();
    if (j.contains("notes")) v.notes = j.at("notes").get<std::vector<std::string>>();
    return v;
}

inline json to_json(const classifier::LinkRow& r) {
    json j{{"type", to_json(r.curve_type)},
           {"list", membership_key(r.list)},
           {"status", status_key(r.status)},
           {"secants", int_to_json(r.secant_count)}};
    if (r.link) j["link"] = link_key(*r.link);
    if (r.secant_conventional) j["secants_conventional"] = true;
    return j;
}
inline classifier::LinkRow link_row_from_json(const json& j) {
    classifier::LinkRow r;
    r.curve_type = curve_type_from_json(j.at("type"));
    r.list = membership_from_key(j.at("list").get<std::string>());
    r.status = status_from_key(j.at("status").get<std::string>());
    r.secant_count = int_from_json(j.at("secants"));
    if (j.contains("link")) r.link = link_from_key(j.at("link").get<std::string>());
    if (j.contains("secants_conventional")) r.secant_conventional = j.at("secants_conventional").get<bool>();
    return r;
}

// --- del Pezzo classes ------------------------------------------------------

inline std::string model_key(delpezzo::Model m) {
    switch (m) {
        case delpezzo::Model::cubic_surface: return "cubic";
        case delpezzo::Model::del_pezzo4: return "dp4";
        case delpezzo::Model::singular_quadric: return "singular_quadric";
    }
    return "?";
}
inline delpezzo::Model model_from_key(const std::string& k) {
    for (auto m : {delpezzo::Model::cubic_surface, delpezzo::Model::del_pezzo4,
                   delpezzo::Model::singular_quadric})
        if (model_key(m) == k) return m;
    throw std::invalid_argument("unknown model '" + k + "'");
}

inline json to_json(const delpezzo::PlaneModelClass& c, delpezzo::Model m) {
    return json{{"k", int_to_json(c.k)}, {"mults", int_vector_to_json(c.mults)}, {"model", model_key(m)}};
}
inline delpezzo::PlaneModelClass plane_class_from_json(const json& j) {
    return delpezzo::PlaneModelClass(int_from_json(j.at("k")), int_vector_from_json(j.at("mults")));
}

// --- reports and simulations -------------------------------------------------

inline json to_json(const checks::Report& rep, bool metadata = true) {
    json rows = json::array();
    for (const auto& r : rep.rows)
        rows.push_back(json{{"row", r.row}, {"pass", r.pass}, {"detail", r.detail}});
    json j{{"table", rep.table}, {"pass", rep.pass()}, {"rows", rows}};
    if (metadata && !rep.notes.empty()) j["notes"] = rep.notes;
    return j;
}

inline json to_json(const dynamics::DegreeState& st) {
    json marked = json::array();
    for (const auto& p : st.marked)
        marked.push_back(json{{"id", p.id}, {"mult", int_to_json(p.mult)}, {"age", p.age}});
    return json{{"step", st.step},
                {"centre", st.centre},
                {"degree", int_to_json(st.degree)},
                {"mult_at_centre", int_to_json(st.mult_at_centre)},
                {"fresh_ok", st.fresh_ok},
                {"tiers_ok", st.tiers_ok},
                {"growth_ok", st.growth_ok},
                {"marked", marked}};
}

}  // namespace cubicfano::jsonio
