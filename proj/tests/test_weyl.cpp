#include <doctest.h>

#include "kmfold/weyl.hpp"

using namespace kmfold;

namespace {
Poly cp(const char* c, const char* a) {
    auto ac = parse_case(c);
    return charpoly_int(twisted_coxeter(ac, resolve_auto(ac, a)).map_coroot);
}
Poly tmm(int m) { return Poly::t_pow_minus_one(m); }
}  // namespace

TEST_CASE("root side reflection on A1[1]") {
    auto r = reflection({{2, -2}, {-2, 2}}, 0).root;
    CHECK(r(0, 0) == Rational(-1));  // alpha_0 -> -alpha_0
    CHECK(r(0, 1) == Rational(2));   // alpha_1 -> alpha_1 + 2 alpha_0
    CHECK(r(1, 1) == Rational(1));
}

TEST_CASE("Coxeter words") {
    auto b = parse_case("B1[5]");
    CHECK(coxeter_word(b, resolve_auto(b, "gamma")) == std::vector<int>{1, 2, 3, 4, 5});
    auto e = parse_case("E1[6]");
    CHECK(coxeter_word(e, resolve_auto(e, "gamma")) == std::vector<int>{1, 2, 3});
    auto d = parse_case("D1[5]");
    CHECK(coxeter_word(d, resolve_auto(d, "id")) == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("characteristic polynomials") {
    CHECK(cp("E1[7]", "gamma") == tmm(3) * tmm(5));
    CHECK(cp("A1[1]", "gamma") == tmm(1) * tmm(1));
    CHECK(cp("D1[7]", "gamma*sigma") == tmm(1) * Poly({1, 0, 1}) * tmm(5));
}

TEST_CASE("fixed spaces") {
    auto c = parse_case("D1[5]");
    auto g = build_affine_cartan(c);
    auto tau = resolve_auto(c, "gamma");
    auto fs = fixed_space(twisted_coxeter(c, tau).map_coroot);
    REQUIRE(fs.size() == 1);
    CHECK(fixed_space(reflection(g.entries, 2).coroot).size() == g.n() - 1);
    CHECK(fixed_space(perm_matrix(tau.perm)).size() == std::size_t(orbit_data(tau.perm).s()));
}

TEST_CASE("distinct orbit fixed points") {
    auto c = parse_case("D1[6]");
    auto m = build_affine_cartan(c).entries;
    auto tau = resolve_auto(c, "sigma");
    CHECK(distinct_orbit_fixpoint_check(m, tau.perm, {}));
    CHECK(distinct_orbit_fixpoint_check(m, tau.perm, orbit_data(tau.perm).representatives));
    CHECK_THROWS(distinct_orbit_fixpoint_check(m, tau.perm, {5, 6}));
}
