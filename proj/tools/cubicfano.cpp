// Command-line front end: classification queries, table reproduction and
// verification, dynamical degrees, degree-growth simulation, and the
// symbolic conic-bundle involution.
//
// Exit codes: 0 success / determinate verdict, 1 failed check or
// violated invariant, 2 undetermined verdict, 3 inconsistent flags,
// 64 usage error.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cubicfano/classifier.hpp"
#include "cubicfano/delpezzo.hpp"
#include "cubicfano/dynamics.hpp"
#include "cubicfano/invariants.hpp"
#include "cubicfano/json_io.hpp"
#include "cubicfano/lattice.hpp"
#include "cubicfano/spectral.hpp"
#include "cubicfano/surd.hpp"
#include "cubicfano/table_checks.hpp"

namespace {

using namespace cubicfano;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUndetermined = 2;
constexpr int kExitInconsistent = 3;
constexpr int kExitUsage = 64;

struct Options {
    std::string format = "text";  // text | json
    bool metadata = true;
    std::map<std::string, std::string> flags;
    std::vector<std::string> positional;
};

[[noreturn]] void usage(const std::string& msg = "") {
    if (!msg.empty()) std::cerr << "error: " << msg << "\n\n";
    std::cerr <<
        "usage: cubicfano <command> [arguments] [--format=text|json] [--no-metadata]\n"
        "\n"
        "commands:\n"
        "  classify <g> <d> [--in-hyperplane=yes|no|unknown]\n"
        "                   [--three-secant=yes|no|unknown]\n"
        "                   [--p4-secant-in-y=yes|no|unknown]\n"
        "      weak-Fano verdict for the blow-up of a type-(g,d) curve\n"
        "  tables <1|2|3|4|5|6|tau|candidates>\n"
        "      regenerate a table from the formulas and verify it\n"
        "  secants <g> <d>\n"
        "      number of 2-secant lines, from the N-formula\n"
        "  dyndeg [--d1=6] [--d2=6] [--word=geiser:1,2,3 | --word=tau:6@1,6@2]\n"
        "      dynamical degree of a composed lattice action\n"
        "  geiser-sim [--pattern=1,2,3] [--steps=40] [--ndjson]\n"
        "      degree-growth simulation for a word of Geiser involutions\n"
        "  conic-involution <file|->\n"
        "      symbolic fibrewise involution from a JSON {variables,F,s} description\n";
    std::exit(kExitUsage);
}

Options parse_options(int argc, char** argv, int first) {
    Options o;
    for (int i = first; i < argc; ++i) {
        std::string a = argv[i];
        if (a.rfind("--", 0) == 0) {
            auto eq = a.find('=');
            std::string key = a.substr(2, eq == std::string::npos ? std::string::npos : eq - 2);
            std::string val = eq == std::string::npos ? "" : a.substr(eq + 1);
            if (key == "format") {
                if (val != "text" && val != "json") usage("--format must be text or json");
                o.format = val;
            } else if (key == "no-metadata") {
                o.metadata = false;
            } else if (key == "metadata") {
                o.metadata = true;
            } else {
                o.flags[key] = val;
            }
        } else {
            o.positional.push_back(a);
        }
    }
    return o;
}

classifier::Flag parse_flag(const std::string& v, const std::string& name) {
    if (v == "yes") return classifier::Flag::yes;
    if (v == "no") return classifier::Flag::no;
    if (v == "unknown" || v.empty()) return classifier::Flag::unknown;
    usage("--" + name + " must be yes, no or unknown");
}

long long parse_ll(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (...) {
        usage(what + " must be an integer, got '" + s + "'");
    }
}

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(static_cast<int>(parse_ll(item, what)));
    if (out.empty()) usage(what + " must be a comma-separated list of integers");
    return out;
}

// --- small text-table renderer ------------------------------------------------

void print_table(const std::vector<std::string>& headers,
                 const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> w(headers.size());
    for (size_t j = 0; j < headers.size(); ++j) w[j] = headers[j].size();
    for (const auto& r : rows)
        for (size_t j = 0; j < r.size(); ++j) w[j] = std::max(w[j], r[j].size());
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (size_t j = 0; j < cells.size(); ++j) {
            s += cells[j];
            if (j + 1 < cells.size()) s += std::string(w[j] - cells[j].size() + 2, ' ');
        }
        std::cout << s << "\n";
    };
    line(headers);
    size_t total = 0;
    for (size_t j = 0; j < w.size(); ++j) total += w[j] + (j + 1 < w.size() ? 2 : 0);
    std::cout << std::string(total, '-') << "\n";
    for (const auto& r : rows) line(r);
}

std::string mults_str(const std::vector<Int>& m, int split = -1) {
    std::string s = "(";
    for (size_t i = 0; i < m.size(); ++i) {
        if (split >= 0 && static_cast<int>(i) == split) s += " | ";
        else if (i) s += ",";
        s += m[i].str();
    }
    return s + ")";
}

// --- classify ------------------------------------------------------------------

int cmd_classify(const Options& o) {
    if (o.positional.size() != 2) usage("classify expects <g> <d>");
    long long g = parse_ll(o.positional[0], "genus");
    long long d = parse_ll(o.positional[1], "degree");
    if (g < 0 || d < 1) usage("genus must be >= 0 and degree >= 1");
    classifier::GeometricFlags flags;
    for (const auto& [k, v] : o.flags) {
        if (k == "in-hyperplane") flags.in_hyperplane = parse_flag(v, k);
        else if (k == "three-secant") flags.trisecant_in_y = parse_flag(v, k);
        else if (k == "p4-secant-in-y") flags.p4_trisecant_in_y = parse_flag(v, k);
        else usage("unknown flag --" + k);
    }
    classifier::Verdict v = classifier::classify({g, d}, flags);

    if (o.format == "json") {
        std::cout << jsonio::to_json(v, o.metadata).dump(2) << "\n";
    } else {
        std::cout << "type (" << g << "," << d << "): " << classifier::to_string(v.status) << "\n";
        std::cout << "list: " << classifier::to_string(v.list) << "\n";
        if (v.link) std::cout << "link: " << classifier::to_string(*v.link) << "\n";
        if (v.secants)
            std::cout << "2-secant lines: " << v.secants->str()
                      << (v.secants_conventional ? " (itself)" : "") << "\n";
        for (const auto& n : v.needs) std::cout << "needs: " << n << "\n";
        if (o.metadata)
            for (const auto& n : v.notes) std::cout << "note: " << n << "\n";
    }
    if (v.status == classifier::Status::undetermined) return kExitUndetermined;
    if (v.status == classifier::Status::inconsistent) return kExitInconsistent;
    return kExitOk;
}

// --- tables ---------------------------------------------------------------------

void render_model_table(const std::vector<delpezzo::PlaneModelClass>& rows, delpezzo::Model model) {
    std::vector<std::vector<std::string>> cells;
    for (const auto& c : rows) {
        cells.push_back({delpezzo::genus(c).str(), delpezzo::degree(c, model).str(), c.k.str(),
                         mults_str(c.mults, delpezzo::family_split(model) == static_cast<int>(c.mults.size())
                                                ? -1
                                                : delpezzo::family_split(model))});
    }
    print_table({"g", "d", "k", "mults"}, cells);
}

int cmd_tables(const Options& o) {
    if (o.positional.size() != 1) usage("tables expects one selector");
    const std::string& which = o.positional[0];

    checks::Report rep;
    json rendered;

    if (which == "1") {
        rep = checks::check_dp4_rows();
        if (o.format == "text") render_model_table(delpezzo::dp4_curve_models(), delpezzo::Model::del_pezzo4);
        else {
            rendered = json::array();
            for (const auto& c : delpezzo::dp4_curve_models())
                rendered.push_back(jsonio::to_json(c, delpezzo::Model::del_pezzo4));
        }
    } else if (which == "2") {
        rep = checks::check_projection_rows();
        if (o.format == "text") {
            std::vector<std::vector<std::string>> cells;
            for (const auto& r : delpezzo::quintic_projection_rows())
                cells.push_back({r.label, delpezzo::genus(r.cls).str(),
                                 delpezzo::degree(r.cls, delpezzo::Model::del_pezzo4).str(), r.cls.k.str(),
                                 mults_str(r.cls.mults)});
            print_table({"curve", "g", "d", "k", "mults"}, cells);
        } else {
            rendered = json::array();
            for (const auto& r : delpezzo::quintic_projection_rows()) {
                json j = jsonio::to_json(r.cls, delpezzo::Model::del_pezzo4);
                j["label"] = r.label;
                rendered.push_back(j);
            }
        }
    } else if (which == "3") {
        rep = checks::check_singular_quadric_rows();
        if (o.format == "text")
            render_model_table(delpezzo::singular_quadric_curve_models(), delpezzo::Model::singular_quadric);
        else {
            rendered = json::array();
            for (const auto& c : delpezzo::singular_quadric_curve_models())
                rendered.push_back(jsonio::to_json(c, delpezzo::Model::singular_quadric));
        }
    } else if (which == "4") {
        rep = checks::check_residual_rows();
        std::vector<std::vector<std::string>> cells;
        rendered = json::array();
        for (const auto& c : delpezzo::dp4_curve_models()) {
            delpezzo::ResidualSystem rs = delpezzo::residual_system(c);
            if (o.format == "text") {
                cells.push_back({delpezzo::genus(c).str(), delpezzo::degree(c, delpezzo::Model::del_pezzo4).str(),
                                 c.k.str(), mults_str(c.mults),
                                 rs.residual_class.k.str() + " " + mults_str(rs.residual_class.mults)});
            } else {
                json j{{"curve", jsonio::to_json(c, delpezzo::Model::del_pezzo4)},
                       {"residual", jsonio::to_json(rs.residual_class, delpezzo::Model::del_pezzo4)}};
                if (rs.extra_fixed_part)
                    j["fixed_part"] = jsonio::to_json(*rs.extra_fixed_part, delpezzo::Model::del_pezzo4);
                rendered.push_back(j);
            }
        }
        if (o.format == "text") print_table({"g", "d", "k", "mults", "R"}, cells);
    } else if (which == "5") {
        rep = checks::check_no_trisecant_enumeration();
        auto rows = delpezzo::enumerate_cubic_no3secant();
        if (o.format == "text") render_model_table(rows, delpezzo::Model::cubic_surface);
        else {
            rendered = json::array();
            for (const auto& c : rows) rendered.push_back(jsonio::to_json(c, delpezzo::Model::cubic_surface));
        }
    } else if (which == "6") {
        rep = checks::check_link_rows();
        if (o.format == "text") {
            std::vector<std::vector<std::string>> cells;
            for (const auto& r : classifier::link_table()) {
                cells.push_back({classifier::to_string(r.list), classifier::to_string(r.status),
                                 "(" + std::to_string(r.curve_type.genus) + "," +
                                     std::to_string(r.curve_type.degree) + ")",
                                 r.link ? classifier::to_string(*r.link) : "-",
                                 r.secant_count.str() + (r.secant_conventional ? " (itself)" : "")});
            }
            print_table({"list", "properties", "(g,d)", "link", "secants"}, cells);
        } else {
            rendered = json::array();
            for (const auto& r : classifier::link_table()) rendered.push_back(jsonio::to_json(r));
        }
    } else if (which == "tau") {
        rep = checks::check_tau_table();
        if (o.format == "text") {
            std::vector<std::vector<std::string>> cells;
            for (long d = 1; d <= 6; ++d)
                cells.push_back({std::to_string(d), invariants::tau_max_genus(d).str()});
            print_table({"d", "tau(d)"}, cells);
        } else {
            rendered = json::array();
            for (long d = 1; d <= 6; ++d)
                rendered.push_back(json{{"d", d}, {"tau", jsonio::int_to_json(invariants::tau_max_genus(d))}});
        }
    } else if (which == "candidates") {
        rep = checks::check_candidates();
        auto cands = classifier::enumerate_candidates(6);
        if (o.format == "text") {
            std::vector<std::vector<std::string>> cells;
            for (const auto& t : cands)
                cells.push_back({"(" + std::to_string(t.genus) + "," + std::to_string(t.degree) + ")",
                                 classifier::to_string(classifier::membership(t))});
            print_table({"(g,d)", "list"}, cells);
        } else {
            rendered = json::array();
            for (const auto& t : cands) {
                json j = jsonio::to_json(t);
                j["list"] = jsonio::membership_key(classifier::membership(t));
                rendered.push_back(j);
            }
        }
    } else {
        usage("unknown table selector '" + which + "'");
    }

    if (o.format == "json") {
        json out{{"rows", rendered}, {"check", jsonio::to_json(rep, o.metadata)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << (rep.pass() ? "check: all rows PASS" : "check: FAIL") << "\n";
        for (const auto& r : rep.rows)
            if (!r.pass) std::cout << "  FAIL " << r.row << ": " << r.detail << "\n";
        if (o.metadata)
            for (const auto& n : rep.notes) std::cout << "note: " << n << "\n";
    }
    return rep.pass() ? kExitOk : kExitFail;
}

// --- secants --------------------------------------------------------------------

int cmd_secants(const Options& o) {
    if (o.positional.size() != 2) usage("secants expects <g> <d>");
    long long g = parse_ll(o.positional[0], "genus");
    long long d = parse_ll(o.positional[1], "degree");
    if (g < 0 || d < 1) usage("genus must be >= 0 and degree >= 1");
    invariants::CurveType t{g, d};
    auto n = invariants::secant_line_count(t);
    bool conventional = invariants::secant_count_is_conventional(t);
    if (o.format == "json") {
        json j{{"g", g}, {"d", d}};
        if (n) j["secants"] = jsonio::int_to_json(*n);
        else j["secants"] = nullptr;
        if (conventional) j["conventional"] = true;
        std::cout << j.dump(2) << "\n";
    } else {
        if (n)
            std::cout << n->str() << (conventional ? " (the line counts as its own 2-secant)" : "") << "\n";
        else
            std::cout << "inapplicable (formula value negative)\n";
    }
    return kExitOk;
}

// --- dyndeg ---------------------------------------------------------------------

std::vector<lattice::LatticeAction> parse_word(const std::string& text) {
    std::vector<lattice::LatticeAction> word;
    if (text.rfind("geiser:", 0) == 0) {
        std::vector<int> idx = parse_int_list(text.substr(7), "geiser word");
        int n = 0;
        for (int i : idx) n = std::max(n, i);
        for (int i : idx) {
            if (i < 1) usage("geiser point indices start at 1");
            word.push_back(dynamics::geiser_embedding(i, n));
        }
        return word;
    }
    if (text.rfind("tau:", 0) == 0) {
        std::stringstream ss(text.substr(4));
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto at = item.find('@');
            if (at == std::string::npos) usage("tau word entries look like d@exceptional, e.g. 6@1");
            long long d = parse_ll(item.substr(0, at), "tau degree");
            long long e = parse_ll(item.substr(at + 1), "exceptional index");
            if (e != 1 && e != 2) usage("exceptional index must be 1 or 2");
            word.push_back(dynamics::embed_rank3(dynamics::tau_action(d).action, static_cast<int>(e)));
        }
        if (word.empty()) usage("empty tau word");
        return word;
    }
    usage("--word must start with geiser: or tau:");
}

int cmd_dyndeg(const Options& o) {
    std::vector<lattice::LatticeAction> word;
    bool have_word = o.flags.count("word") > 0;
    bool have_d = o.flags.count("d1") > 0 || o.flags.count("d2") > 0;
    if (have_word && have_d) usage("--word and --d1/--d2 are mutually exclusive");
    if (have_word) {
        word = parse_word(o.flags.at("word"));
    } else {
        long long d1 = o.flags.count("d1") ? parse_ll(o.flags.at("d1"), "--d1") : 6;
        long long d2 = o.flags.count("d2") ? parse_ll(o.flags.at("d2"), "--d2") : 6;
        // tau'_1* o tau'_2*: the second factor acts first.
        word.push_back(dynamics::embed_rank3(dynamics::tau_action(d2).action, 2));
        word.push_back(dynamics::embed_rank3(dynamics::tau_action(d1).action, 1));
    }
    dynamics::DynamicalDegree res = dynamics::dynamical_degree(word);

    if (o.format == "json") {
        json j = jsonio::to_json(res.spectral);
        j["degree_sequence"] = jsonio::int_vector_to_json(res.degree_seq);
        std::cout << j.dump(2) << "\n";
    } else {
        if (res.spectral.is_exact()) {
            std::cout << "dynamical degree = " << res.spectral.exact->str() << "\n";
            std::cout << "               ~= " << res.spectral.exact->decimal(15) << "\n";
        } else {
            std::cout << "dynamical degree in [" << decimal_string(res.spectral.interval.lo, 15) << ", "
                      << decimal_string(res.spectral.interval.hi, 15) << "]\n";
        }
        if (o.metadata) {
            std::cout << "degree sequence:";
            for (const auto& v : res.degree_seq) std::cout << " " << v.str();
            std::cout << "\n";
        }
    }
    return kExitOk;
}

// --- geiser-sim -----------------------------------------------------------------

int cmd_geiser_sim(const Options& o) {
    std::vector<int> pattern = {1, 2, 3};
    int steps = 40;
    bool ndjson = false;
    for (const auto& [k, v] : o.flags) {
        if (k == "pattern") pattern = parse_int_list(v, "--pattern");
        else if (k == "steps") steps = static_cast<int>(parse_ll(v, "--steps"));
        else if (k == "ndjson") ndjson = true;
        else usage("unknown flag --" + k);
    }
    if (steps < 1) usage("--steps must be >= 1");
    for (int c : pattern)
        if (c < 1) usage("pattern entries must be >= 1");

    std::vector<dynamics::DegreeState> states = dynamics::geiser_degree_simulation(pattern, steps);
    int first_bad = 0;
    for (const auto& st : states)
        if (!st.all_ok() && first_bad == 0) first_bad = st.step;

    if (ndjson || o.format == "json") {
        for (const auto& st : states) std::cout << jsonio::to_json(st).dump() << "\n";
    } else {
        std::vector<std::vector<std::string>> cells;
        for (const auto& st : states)
            cells.push_back({std::to_string(st.step), "p" + std::to_string(st.centre), st.degree.str(),
                             st.mult_at_centre.str(), st.all_ok() ? "ok" : "VIOLATED"});
        print_table({"step", "centre", "degree", "mult", "invariants"}, cells);
    }
    if (first_bad) {
        std::cerr << "invariant violated at step " << first_bad << "\n";
        return kExitFail;
    }
    return kExitOk;
}

// --- conic-involution --------------------------------------------------------------

int cmd_conic_involution(const Options& o) {
    if (o.positional.size() != 1) usage("conic-involution expects a JSON file path or '-'");
    json input;
    if (o.positional[0] == "-") {
        std::cin >> input;
    } else {
        std::ifstream in(o.positional[0]);
        if (!in) {
            std::cerr << "error: cannot read '" << o.positional[0] << "'\n";
            return kExitFail;
        }
        in >> input;
    }

    try {
        symbolic::VarSet vars(input.at("variables").get<std::vector<std::string>>());
        const json& fj = input.at("F");
        auto coeff = [&](const char* key) {
            return symbolic::parse_expression(vars, fj.at(key).get<std::string>());
        };
        dynamics::ConicBundleData data{
            vars,
            {coeff("xx"), coeff("yy"), coeff("zz"), coeff("xy"), coeff("xz"), coeff("yz")},
            {symbolic::parse_expression(vars, input.at("s").at(0).get<std::string>()),
             symbolic::parse_expression(vars, input.at("s").at(1).get<std::string>()),
             symbolic::parse_expression(vars, input.at("s").at(2).get<std::string>())}};

        dynamics::ConicInvolution inv = dynamics::conic_bundle_involution(data);

        // Verify the defining identities symbolically.
        auto mat_mul = [&](const std::array<symbolic::RationalFunction, 9>& x,
                           const std::array<symbolic::RationalFunction, 9>& y) {
            std::array<symbolic::RationalFunction, 9> r{
                symbolic::RationalFunction(vars.size()), symbolic::RationalFunction(vars.size()),
                symbolic::RationalFunction(vars.size()), symbolic::RationalFunction(vars.size()),
                symbolic::RationalFunction(vars.size()), symbolic::RationalFunction(vars.size()),
                symbolic::RationalFunction(vars.size()), symbolic::RationalFunction(vars.size()),
                symbolic::RationalFunction(vars.size())};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    symbolic::RationalFunction s(vars.size());
                    for (int k = 0; k < 3; ++k)
                        s = s + x[static_cast<size_t>(i) * 3 + k] * y[static_cast<size_t>(k) * 3 + j];
                    r[static_cast<size_t>(i) * 3 + j] = s;
                }
            return r;
        };
        auto transpose = [&](const std::array<symbolic::RationalFunction, 9>& x) {
            auto r = x;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) r[static_cast<size_t>(i) * 3 + j] = x[static_cast<size_t>(j) * 3 + i];
            return r;
        };
        symbolic::RationalFunction f2 = inv.f * inv.f;
        auto sq = mat_mul(inv.m, inv.m);
        bool square_ok = true;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                symbolic::RationalFunction want =
                    (i == j) ? f2 : symbolic::RationalFunction(vars.size());
                square_ok = square_ok && sq[static_cast<size_t>(i) * 3 + j] == want;
            }
        auto af = dynamics::gram_matrix(data);
        auto pres = mat_mul(transpose(inv.m), mat_mul(af, inv.m));
        bool form_ok = true;
        for (int i = 0; i < 9; ++i) form_ok = form_ok && pres[static_cast<size_t>(i)] == f2 * af[static_cast<size_t>(i)];
        bool fixes_ok = true;
        for (int i = 0; i < 3; ++i) {
            symbolic::RationalFunction img(vars.size());
            for (int j = 0; j < 3; ++j)
                img = img + inv.m[static_cast<size_t>(i) * 3 + j] * data.section[static_cast<size_t>(j)];
            fixes_ok = fixes_ok && img == inv.f * data.section[static_cast<size_t>(i)];
        }

        if (o.format == "json") {
            json mj = json::array();
            for (int i = 0; i < 3; ++i) {
                json row = json::array();
                for (int j = 0; j < 3; ++j) row.push_back(inv.at(i, j).str(vars));
                mj.push_back(row);
            }
            json out{{"matrix", mj},
                     {"f", inv.f.str(vars)},
                     {"checks",
                      json{{"square_is_f2_identity", square_ok},
                           {"preserves_form", form_ok},
                           {"fixes_section", fixes_ok}}}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "f = F(s) = " << inv.f.str(vars) << "\n";
            for (int i = 0; i < 3; ++i) {
                std::cout << "M[" << i << "] = [";
                for (int j = 0; j < 3; ++j) std::cout << (j ? " | " : "") << inv.at(i, j).str(vars);
                std::cout << "]\n";
            }
            std::cout << "M^2 = f^2 Id: " << (square_ok ? "ok" : "FAIL") << "\n";
            std::cout << "M^T A_F M = f^2 A_F: " << (form_ok ? "ok" : "FAIL") << "\n";
            std::cout << "M s = f s: " << (fixes_ok ? "ok" : "FAIL") << "\n";
        }
        return (square_ok && form_ok && fixes_ok) ? kExitOk : kExitFail;
    } catch (const json::exception& e) {
        std::cerr << "error: bad input JSON: " << e.what() << "\n";
        return kExitFail;
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) usage();
    std::string cmd = argv[1];
    Options o = parse_options(argc, argv, 2);
    try {
        if (cmd == "classify") return cmd_classify(o);
        if (cmd == "tables") return cmd_tables(o);
        if (cmd == "secants") return cmd_secants(o);
        if (cmd == "dyndeg") return cmd_dyndeg(o);
        if (cmd == "geiser-sim") return cmd_geiser_sim(o);
        if (cmd == "conic-involution") return cmd_conic_involution(o);
        if (cmd == "help" || cmd == "--help" || cmd == "-h") usage();
        usage("unknown command '" + cmd + "'");
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
}
