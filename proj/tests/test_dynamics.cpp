#include <doctest.h>

#include "cubicfano/dynamics.hpp"

using namespace cubicfano;
using namespace cubicfano::dynamics;
using lattice::DivisorClass;
using lattice::IntMatrix;
using lattice::LatticeAction;

TEST_CASE("tau actions are derived, not stored") {
    TauAction t5 = tau_action(5);
    TauAction t6 = tau_action(6);
    CHECK(t5.action.matrix() == IntMatrix{{13, 24}, {-7, -13}});
    CHECK(t6.action.matrix() == IntMatrix{{11, 20}, {-6, -11}});
    CHECK_FALSE(t5.extrapolated);
    CHECK_FALSE(t6.extrapolated);
    CHECK(tau_action(7).extrapolated);

    DivisorClass mk(blowup_basis(), {2, -1});
    for (long long d = 4; d <= 9; ++d) {
        TauAction t = tau_action(d);
        CHECK(compose(t.action, t.action) == LatticeAction::identity(blowup_basis()));
        CHECK(t.action.apply(mk) == mk);
        CHECK(t.action.det() == -1);
    }
}

TEST_CASE("anticanonical square and fibre classes") {
    CHECK(anticanonical_square_class(6).coeffs() == std::vector<Int>{6, -10});
    CHECK(anticanonical_square_class(5).coeffs() == std::vector<Int>{7, -12});
    CHECK(sigma_f_class(6).coeffs() == std::vector<Int>{6, -11});
    // f . (-K_X) = 1 for all d
    DivisorClass mk(blowup_basis(), {2, -1});
    lattice::CurveClass f(blowup_curve_basis(), {0, 1});
    CHECK(curve_divisor_pairing(f, mk) == 1);
    for (long long d = 4; d <= 8; ++d) {
        // sigma(f) . H = 12 - d
        DivisorClass h(blowup_basis(), {1, 0});
        CHECK(curve_divisor_pairing(sigma_f_class(d), h) == 12 - Int(d));
    }
}

TEST_CASE("rank-3 embeddings") {
    LatticeAction e1 = embed_rank3(tau_action(6).action, 1);
    LatticeAction e2 = embed_rank3(tau_action(6).action, 2);
    CHECK(e1.matrix() == IntMatrix{{11, 20, 0}, {-6, -11, 0}, {0, 0, 1}});
    CHECK(e2.matrix() == IntMatrix{{11, 0, 20}, {0, 1, 0}, {-6, 0, -11}});
    CHECK(e1.det() == -1);
    CHECK(e2.det() == -1);
    DivisorClass mk(two_blowup_basis(), {2, -1, -1});
    CHECK(e1.apply(mk) == mk);
    CHECK(e2.apply(mk) == mk);
    CHECK_THROWS_AS(embed_rank3(tau_action(6).action, 3), std::invalid_argument);
}

TEST_CASE("composed involutions and the headline dynamical degree") {
    LatticeAction m = composed_involutions(6, 6);
    CHECK(m.matrix() == IntMatrix{{121, 20, 220}, {-66, -11, -120}, {-6, 0, -11}});
    CHECK(m.det() == 1);
    CHECK(m.matrix().trace() == 99);

    DynamicalDegree dd = dynamical_degree({embed_rank3(tau_action(6).action, 2),
                                           embed_rank3(tau_action(6).action, 1)});
    REQUIRE(dd.spectral.is_exact());
    QuadraticSurd lam(Rat(49), Rat(20), Int(6));
    CHECK(*dd.spectral.exact == lam);
    // lambda + 1/lambda = 98 exactly
    CHECK((lam + QuadraticSurd(Rat(1)) / lam) == QuadraticSurd(Rat(98)));
    // empirical ratio close to lambda by step 12 (checked internally too)
    REQUIRE(dd.empirical_ratio.has_value());
    QuadraticSurd err = (QuadraticSurd(*dd.empirical_ratio) - lam).abs();
    CHECK(err < QuadraticSurd(Rat(1, pow10(6))));

    // single involution: dynamical degree 1
    DynamicalDegree single = dynamical_degree({embed_rank3(tau_action(6).action, 1)});
    REQUIRE(single.spectral.is_exact());
    CHECK(*single.spectral.exact == QuadraticSurd(Rat(1)));

    // inverse word gives the same value (composition of two involutions)
    DynamicalDegree inv = dynamical_degree({embed_rank3(tau_action(6).action, 1),
                                            embed_rank3(tau_action(6).action, 2)});
    REQUIRE(inv.spectral.is_exact());
    CHECK(*inv.spectral.exact == *dd.spectral.exact);
}

TEST_CASE("degree sequence of the composed action grows with ratio -> lambda") {
    LatticeAction m = composed_involutions(6, 6);
    lattice::CurveClass h_deg(lattice::Basis{"l1", "l2", "l3"}, {1, 0, 0});
    DivisorClass h(two_blowup_basis(), {1, 0, 0});
    auto seq = lattice::degree_sequence(m, h_deg, h, 10);
    CHECK(seq[0] == 121);
    for (size_t i = 1; i < seq.size(); ++i) CHECK(seq[i] > seq[i - 1]);
    // consecutive ratio within 1e-6 of the dynamical degree by step 10
    QuadraticSurd lam(Rat(49), Rat(20), Int(6));
    QuadraticSurd ratio{Rat(seq[9], seq[8])};
    CHECK((ratio - lam).abs() < QuadraticSurd(Rat(1, pow10(6))));
}

TEST_CASE("geiser embeddings cap the rank at 16") {
    CHECK_NOTHROW(geiser_embedding(1, 15));
    CHECK_THROWS_AS(geiser_embedding(1, 16), std::invalid_argument);
}

TEST_CASE("geiser involution action") {
    LatticeAction g = geiser_action();
    CHECK(g.matrix() == IntMatrix{{2, 1}, {-3, -2}});
    CHECK(compose(g, g) == LatticeAction::identity(g.basis()));
    CHECK(g.det() == -1);
    // exchanges E with -K - 2E; preserves -K - E
    CHECK(g.apply(DivisorClass(g.basis(), {0, 1})) == DivisorClass(g.basis(), {1, -2}));
    CHECK(g.apply(DivisorClass(g.basis(), {1, -2})) == DivisorClass(g.basis(), {0, 1}));
    CHECK(g.apply(DivisorClass(g.basis(), {1, -1})) == DivisorClass(g.basis(), {1, -1}));
    // spectral radius of a single involution is 1
    auto r = spectral::spectral_radius(g, DivisorClass(g.basis(), {1, -1}));
    REQUIRE(r.is_exact());
    CHECK(*r.exact == QuadraticSurd(Rat(1)));
}

TEST_CASE("geiser word action") {
    LatticeAction w = geiser_word_action({1, 2, 3}, 3);
    // first column is the image of -K after the three involutions
    CHECK(w.matrix().at(0, 0) == 8);
    CHECK(w.matrix().at(1, 0) == -3);
    CHECK(w.matrix().at(2, 0) == -6);
    CHECK(w.matrix().at(3, 0) == -12);
    CHECK(w.det() == -1);

    CHECK(geiser_word_action({1, 1}, 2) == LatticeAction::identity(geiser_basis(2)));
    CHECK_THROWS_AS(geiser_word_action({1, 4}, 3), std::out_of_range);

    // the word matrix is quasi-unipotent: char poly (x-1)^3 (x+1),
    // so its certified spectral radius encloses 1
    auto cp = spectral::char_poly(w.matrix());
    CHECK(cp == std::vector<Int>{-1, 2, 0, -2, 1});
    auto rad = spectral::spectral_radius(w);
    CHECK_FALSE(rad.is_exact());
    CHECK(rad.interval.lo <= 1);
    CHECK(rad.interval.hi >= 1);
    CHECK(rad.interval.width() <= Rat(1, pow10(12)));
}

TEST_CASE("certified interval sits inside rigorous power-iteration brackets") {
    // Independent oracle: for any k, the 1-norm of A^k bounds rho from
    // above via ||A^k||^(1/k), and |trace(A^k)|/n bounds it from below.
    LatticeAction w = geiser_word_action({1, 2, 3}, 3);
    lattice::IntMatrix p = w.matrix();
    lattice::IntMatrix a = w.matrix();
    int n = a.size();
    for (int k = 1; k < 200; ++k) p = p * a;
    // p = A^200
    Int norm1 = 0;
    for (int j = 0; j < n; ++j) {
        Int col = 0;
        for (int i = 0; i < n; ++i) col += boost::multiprecision::abs(p.at(i, j));
        if (col > norm1) norm1 = col;
    }
    Int tr = p.trace();
    if (tr < 0) tr = -tr;
    auto rad = spectral::spectral_radius(w);
    // upper bracket: rho^200 <= ||A^200||_1
    Rat hi200 = 1;
    for (int k = 0; k < 200; ++k) hi200 *= rad.interval.lo;
    CHECK(hi200 <= Rat(norm1));
    // lower bracket: |tr(A^200)| <= n * rho^200
    Rat lo200 = 1;
    for (int k = 0; k < 200; ++k) lo200 *= rad.interval.hi;
    CHECK(Rat(tr) <= Rat(n) * lo200);
}

TEST_CASE("all dynamics-built actions are unimodular") {
    for (long long d = 5; d <= 6; ++d) {
        CHECK(boost::multiprecision::abs(tau_action(d).action.det()) == 1);
        CHECK(boost::multiprecision::abs(embed_rank3(tau_action(d).action, 1).det()) == 1);
    }
    CHECK(boost::multiprecision::abs(composed_involutions(6, 6).det()) == 1);
    CHECK(boost::multiprecision::abs(geiser_action().det()) == 1);
    CHECK(boost::multiprecision::abs(geiser_word_action({1, 2, 3, 1, 2}, 3).det()) == 1);
}

TEST_CASE("degree simulation: base case and doubling") {
    auto states = geiser_degree_simulation({1, 2, 3}, 30);
    REQUIRE(states.size() == 30);
    CHECK(states[0].degree == 2);
    CHECK(states[0].mult_at_centre == 3);
    Int expect = 2;
    for (const auto& st : states) {
        CHECK(st.degree == expect);
        CHECK(st.all_ok());
        expect *= 2;
    }
}

TEST_CASE("degree simulation: repeated centre degenerates to the involution") {
    auto states = geiser_degree_simulation({1, 1}, 8);
    // degrees alternate 2, 1, 2, 1, ...
    for (size_t i = 0; i < states.size(); ++i) CHECK(states[i].degree == ((i % 2 == 0) ? 2 : 1));
    // freshness violated from the second step on
    CHECK(states[0].fresh_ok);
    CHECK_FALSE(states[1].fresh_ok);
    CHECK_THROWS_AS(geiser_degree_simulation_checked({1, 1}, 8), std::runtime_error);
    CHECK_NOTHROW(geiser_degree_simulation_checked({1, 2, 3}, 20));
}

TEST_CASE("degree simulation: alternating two-point pattern stays fresh") {
    // reusing a point after one intervening step is allowed: the marked
    // point has moved away by then
    auto states = geiser_degree_simulation({1, 2}, 12);
    for (const auto& st : states) CHECK(st.all_ok());
}

TEST_CASE("simulation agrees with the fresh-point lattice model") {
    auto states = geiser_degree_simulation({1, 2, 3}, 15);
    auto lattice_degs = geiser_lattice_degrees(15);
    REQUIRE(lattice_degs.size() == 15);
    for (size_t i = 0; i < 15; ++i) CHECK(states[i].degree == lattice_degs[i]);
}

TEST_CASE("conic involution on the split example") {
    symbolic::VarSet vars({"t"});
    auto c = [&](long v) { return symbolic::RationalFunction::constant(1, Rat(v)); };
    ConicBundleData data{vars, {c(1), c(1), c(-1), c(0), c(0), c(0)}, {c(0), c(0), c(1)}};
    ConicInvolution inv = conic_bundle_involution(data);
    // f = -1 and M = diag(1, 1, -1): the reflection fixing (0,0,1)
    CHECK(inv.f == c(-1));
    CHECK(inv.at(0, 0) == c(1));
    CHECK(inv.at(1, 1) == c(1));
    CHECK(inv.at(2, 2) == c(-1));
    CHECK(inv.at(0, 1) == c(0));
    CHECK(inv.at(1, 0) == c(0));
}

TEST_CASE("conic involution error paths") {
    symbolic::VarSet vars({"t"});
    auto c = [&](long v) { return symbolic::RationalFunction::constant(1, Rat(v)); };
    // section on the conic: F = x^2 + y^2 - 2z^2 is nondegenerate and
    // vanishes at (1, 1, 1)
    ConicBundleData on_conic{vars, {c(1), c(1), c(-2), c(0), c(0), c(0)}, {c(1), c(1), c(1)}};
    CHECK_THROWS_WITH_AS(conic_bundle_involution(on_conic),
                         "conic_bundle_involution: section lies on the bundle", std::domain_error);
    // degenerate form
    ConicBundleData degen{vars, {c(1), c(0), c(0), c(0), c(0), c(0)}, {c(0), c(1), c(0)}};
    CHECK_THROWS_AS(conic_bundle_involution(degen), std::domain_error);
    // zero section
    ConicBundleData zero{vars, {c(1), c(1), c(1), c(0), c(0), c(0)}, {c(0), c(0), c(0)}};
    CHECK_THROWS_AS(conic_bundle_involution(zero), std::invalid_argument);
}

TEST_CASE("conic involution: fully symbolic identities") {
    // Nine symbolic variables: the six form coefficients and the section.
    symbolic::VarSet vars({"a", "b", "c", "d", "e", "f", "al", "be", "ga"});
    auto var = [&](int i) { return symbolic::RationalFunction(symbolic::Polynomial::variable(9, i)); };
    ConicBundleData data{vars,
                         {var(0), var(1), var(2), var(3), var(4), var(5)},
                         {var(6), var(7), var(8)}};
    ConicInvolution inv = conic_bundle_involution(data);
    symbolic::RationalFunction f2 = inv.f * inv.f;

    // M^2 = f^2 Id
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            symbolic::RationalFunction s(9);
            for (int k = 0; k < 3; ++k) s = s + inv.at(i, k) * inv.at(k, j);
            if (i == j) CHECK(s == f2);
            else CHECK(s == symbolic::RationalFunction(9));
        }

    // M fixes the section: M s = f s
    for (int i = 0; i < 3; ++i) {
        symbolic::RationalFunction img(9);
        for (int j = 0; j < 3; ++j) img = img + inv.at(i, j) * data.section[static_cast<size_t>(j)];
        CHECK(img == inv.f * data.section[static_cast<size_t>(i)]);
    }

    // Euler-cleared form: doubling the matrix turns the diagonal entries
    // into f_x al - f_y be - f_z ga (and cyclic), the off-diagonal (0,1)
    // entry into 2 al f_y, and so on.
    auto grad = [&](int i) {
        const auto& cs = data.coeff;
        const auto& s = data.section;
        if (i == 0) return Rat(2) * cs[0] * s[0] + cs[3] * s[1] + cs[4] * s[2];
        if (i == 1) return Rat(2) * cs[1] * s[1] + cs[3] * s[0] + cs[5] * s[2];
        return Rat(2) * cs[2] * s[2] + cs[4] * s[0] + cs[5] * s[1];
    };
    const auto& s = data.section;
    CHECK(Rat(2) * inv.at(0, 0) == grad(0) * s[0] - grad(1) * s[1] - grad(2) * s[2]);
    CHECK(Rat(2) * inv.at(0, 1) == Rat(2) * s[0] * grad(1));
    CHECK(Rat(2) * inv.at(1, 0) == Rat(2) * s[1] * grad(0));
}
