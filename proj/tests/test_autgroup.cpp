#include <doctest.h>

#include <set>

#include "kmfold/autgroup.hpp"

using namespace kmfold;

namespace {
std::vector<std::string> names(const std::vector<DiagramAut>& v) {
    std::vector<std::string> out;
    for (const auto& a : v) out.push_back(a.name);
    return out;
}
bool has(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }
}  // namespace

TEST_CASE("automorphism group orders") {
    CHECK(automorphism_group(build_affine_cartan(parse_case("A1[1]")).entries).size() == 2);
    for (int n = 2; n <= 8; ++n)
        CHECK(automorphism_group(build_affine_cartan(AffineCase{'A', 1, n}).entries).size() == std::size_t(2 * (n + 1)));
    CHECK(automorphism_group(build_affine_cartan(parse_case("D1[4]")).entries).size() == 24);
}

TEST_CASE("special subgroups") {
    auto d4 = parse_case("D1[4]");
    std::set<Perm> want;
    for (const char* n : {"id", "gamma^2", "gamma*sigma", "gamma^3*sigma"}) want.insert(resolve_auto(d4, n).perm);
    std::set<Perm> got;
    for (const auto& a : special_subgroup(d4)) got.insert(a.perm);
    CHECK(got == want);

    auto d5 = parse_case("D1[5]");
    auto sp = special_subgroup(d5);
    CHECK(sp.size() == 4);
    auto gamma = resolve_auto(d5, "gamma");
    CHECK(gamma.order == 4);
}

TEST_CASE("conjugacy representatives") {
    auto e6 = conjugacy_representatives(parse_case("E1[6]"));
    REQUIRE(e6.size() == 2);
    auto sigma = resolve_auto(parse_case("E1[6]"), "sigma");
    auto gamma = resolve_auto(parse_case("E1[6]"), "gamma");
    CHECK(sigma.perm[1] == 5);
    CHECK(sigma.perm[2] == 4);
    CHECK(gamma.perm[0] == 1);

    auto d7 = names(conjugacy_representatives(parse_case("D1[7]")));
    for (const char* n : {"gamma", "gamma^2", "sigma", "gamma*sigma"}) CHECK(has(d7, n));

    auto a5 = names(conjugacy_representatives(parse_case("A1[5]")));
    CHECK(has(a5, "sigma"));
    CHECK(has(a5, "sigma*gamma"));
}

TEST_CASE("rho sigma decomposition") {
    auto a = parse_case("A1[6]");
    auto d = rho_sigma_decompose(a, resolve_auto(a, "sigma"));
    CHECK(d.rho.perm == identity_perm(7));
    CHECK(d.sigma.perm == resolve_auto(a, "sigma").perm);

    auto d6 = parse_case("D1[6]");
    auto g = rho_sigma_decompose(d6, resolve_auto(d6, "gamma"));
    CHECK(g.rho.perm == resolve_auto(d6, "gamma*sigma").perm);
    CHECK(g.sigma.perm == resolve_auto(d6, "sigma").perm);

    auto id = rho_sigma_decompose(d6, resolve_auto(d6, "id"));
    CHECK(id.rho.perm == identity_perm(7));
    CHECK(id.sigma.perm == identity_perm(7));
}

TEST_CASE("orbit data") {
    auto o = orbit_data(resolve_auto(parse_case("A1[1]"), "gamma").perm);
    CHECK(o.s() == 1);
    CHECK(o.stabilizer_orders[0] == 1);

    auto s = orbit_data(resolve_auto(parse_case("A1[3]"), "sigma").perm);
    CHECK(s.orbits == std::vector<std::vector<int>>{{0}, {1, 3}, {2}});

    auto r = orbit_data(resolve_auto(parse_case("D1[4]"), "rho").perm);
    CHECK(r.orbits == std::vector<std::vector<int>>{{0}, {1, 3, 4}, {2}});
    CHECK(r.stabilizer_orders[0] == 3);
}
