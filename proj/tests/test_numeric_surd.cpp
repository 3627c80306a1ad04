#include <doctest.h>

#include "cubicfano/numeric.hpp"
#include "cubicfano/surd.hpp"

using namespace cubicfano;

TEST_CASE("floor_div rounds toward minus infinity") {
    CHECK(floor_div(Int(7), Int(2)) == 3);
    CHECK(floor_div(Int(-7), Int(2)) == -4);
    CHECK(floor_div(Int(-4), Int(6)) == -1);
    CHECK(floor_div(Int(6), Int(-4)) == -2);
    CHECK(floor_div(Int(-6), Int(-4)) == 1);
}

TEST_CASE("squarefree decomposition") {
    auto r = squarefree_decompose(Int(2400));
    REQUIRE(r.has_value());
    CHECK(r->first == 20);
    CHECK(r->second == 6);
    r = squarefree_decompose(Int(9600));
    REQUIRE(r.has_value());
    CHECK(r->first == 40);
    CHECK(r->second == 6);
    r = squarefree_decompose(Int(1));
    CHECK(r->first == 1);
    CHECK(r->second == 1);
    r = squarefree_decompose(Int(4));
    CHECK(r->first == 2);
    CHECK(r->second == 1);
}

TEST_CASE("surd normalisation and arithmetic") {
    QuadraticSurd lam(Rat(49), Rat(20), Int(6));
    QuadraticSurd conj = lam.conjugate();
    CHECK((lam * conj) == QuadraticSurd(Rat(1)));
    CHECK((lam + conj) == QuadraticSurd(Rat(98)));
    // sqrt(2400) = 20 sqrt(6)
    QuadraticSurd s(Rat(0), Rat(1), Int(2400));
    CHECK(s.b() == 20);
    CHECK(s.radicand() == 6);
    // sqrt(4) collapses to the rational 2
    QuadraticSurd t(Rat(0), Rat(1), Int(4));
    CHECK(t.is_rational());
    CHECK(t.a() == 2);
}

TEST_CASE("surd ordering is exact") {
    QuadraticSurd lam(Rat(49), Rat(20), Int(6));
    CHECK(lam > QuadraticSurd(Rat(97)));
    CHECK(lam < QuadraticSurd(Rat(98)));
    // 49 - 20 sqrt(6) is a small positive number
    QuadraticSurd mu = lam.conjugate();
    CHECK(mu.sign() > 0);
    CHECK(mu < QuadraticSurd(Rat(1, 50)));
    CHECK(mu > QuadraticSurd(Rat(1, 100)));
    // division
    CHECK((QuadraticSurd(Rat(1)) / lam) == mu);
}

TEST_CASE("surd decimal digits are exact") {
    QuadraticSurd lam(Rat(49), Rat(20), Int(6));
    // 49 + 20*sqrt(6) = 97.98979485566356196394...
    CHECK(lam.decimal(15) == "97.989794855663561");
    CHECK(lam.decimal(6) == "97.989794");
    QuadraticSurd neg = -lam;
    CHECK(neg.decimal(4) == "-97.9898");  // floor, so the negative rounds away from zero
    CHECK(QuadraticSurd(Rat(5, 4)).decimal(3) == "1.250");
}

TEST_CASE("surd floor") {
    QuadraticSurd lam(Rat(49), Rat(20), Int(6));
    CHECK(lam.floor() == 97);
    CHECK((-lam).floor() == -98);
    CHECK(QuadraticSurd(Rat(3)).floor() == 3);
    QuadraticSurd r2(Rat(0), Rat(1), Int(2));
    CHECK(r2.floor() == 1);
    CHECK((-r2).floor() == -2);
}

TEST_CASE("mixed radicands are rejected") {
    QuadraticSurd a(Rat(1), Rat(1), Int(2));
    QuadraticSurd b(Rat(1), Rat(1), Int(3));
    CHECK_THROWS_AS(a + b, std::domain_error);
    CHECK_NOTHROW(a + QuadraticSurd(Rat(7)));
}
