#include <doctest.h>

#include "kmfold/catalog.hpp"

using namespace kmfold;

TEST_CASE("A1[1] matrix and marks") {
    auto g = build_affine_cartan(parse_case("A1[1]"));
    CHECK(g.entries == IMat{{2, -2}, {-2, 2}});
    CHECK(g.marks == IVec{1, 1});
    CHECK(g.dual_marks == IVec{1, 1});
}

TEST_CASE("C1[n] marks are (1,2,...,2,1)") {
    for (int n = 2; n <= 9; ++n) {
        auto g = build_affine_cartan(AffineCase{'C', 1, n});
        IVec want(n + 1, 2);
        want.front() = want.back() = 1;
        CHECK(g.marks == want);
    }
}

TEST_CASE("recognize") {
    auto r = recognize({{2, -2}, {-2, 2}});
    REQUIRE(r.kind == Recognition::Case);
    CHECK(r.value.str() == "A1[1]");
    CHECK(recognize({{0}}).kind == Recognition::Zero);
    CHECK(recognize({{2, -1}, {-1, 2}}).kind == Recognition::NotAffine);
}

TEST_CASE("finite data and symmetrizers") {
    auto a = finite_data(parse_case("A1[1]"));
    CHECK(a.cartan == IMat{{2}});
    CHECK(a.symmetrizer == QVec{Rational(1)});

    auto c = finite_data(parse_case("C1[2]"));
    CHECK(c.symmetrizer == QVec{Rational(1, 2), Rational(1)});

    auto b = finite_data(parse_case("B1[3]"));
    int shorts = 0;
    for (const auto& d : b.symmetrizer) shorts += d != Rational(1);
    CHECK(shorts == 1);
}

TEST_CASE("descriptor parsing") {
    auto c = parse_case("e1[7]");
    CHECK(c.family == 'E');
    CHECK(c.rank == 7);
    CHECK(c.display() == "E^1_7");
    CHECK_THROWS_AS(parse_case("X1[3]"), CaseError);
    CHECK_THROWS_AS(parse_case("A1"), CaseError);
}
