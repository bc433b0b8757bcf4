#include <doctest.h>

#include "kmfold/section.hpp"

using namespace kmfold;

namespace {
SectionData sec(const char* c, const char* a) {
    auto ac = parse_case(c);
    return section(ac, resolve_auto(ac, a));
}
}  // namespace

TEST_CASE("section data") {
    auto a = sec("A1[1]", "gamma");
    CHECK(a.k == 1);
    CHECK(a.b == IVec{1, 0});
    CHECK(a.p == Rational(2));

    auto e = sec("E1[7]", "gamma");
    CHECK(e.k == 2);
    CHECK(e.b == IVec{7, 10, 9, 4, 3, 6, 5, 0});

    auto d = sec("D1[4]", "rho");
    CHECK(d.k == 1);
    CHECK(d.b == IVec{1, 2, 1, 1, 0});
    CHECK(d.p == Rational(1));

    CHECK(sec("E1[6]", "gamma").p == Rational(6));
}

TEST_CASE("E1[6] sigma tuple satisfies M b = k c") {
    auto c = parse_case("E1[6]");
    auto tau = resolve_auto(c, "sigma");
    auto s = solve_b(c, tau);
    auto g = build_affine_cartan(c);
    auto cox = twisted_coxeter(c, tau).map_coroot;
    CHECK(s.b == IVec{1, 5, 6, 3, 2, 3, 0});
    for (std::size_t i = 0; i < g.n(); ++i) {
        Rational row(0);
        for (std::size_t j = 0; j < g.n(); ++j) row += (cox(i, j) - Rational(i == j)) * Rational(s.b[j]);
        CHECK(row == Rational(s.k * g.dual_marks[i]));
    }
}

TEST_CASE("cstar exponents") {
    auto s = sec("A1[3]", "sigma");
    CHECK(s.cstar_exponents == IVec{s.k, 2 * s.k, s.k});
}
