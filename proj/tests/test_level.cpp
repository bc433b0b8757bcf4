#include <doctest.h>

#include "kmfold/level.hpp"

using namespace kmfold;

namespace {
std::int64_t kf(const char* c, const char* a) {
    auto ac = parse_case(c);
    return fundamental_level(ac, resolve_auto(ac, a)).k_f;
}
}  // namespace

TEST_CASE("coroot Gram matrices") {
    CHECK(coroot_gram(parse_case("A1[1]"))(0, 0) == Rational(2));
    auto d = parse_case("D1[5]");
    CHECK(coroot_gram(d) == QMat(finite_data(d).cartan));
}

TEST_CASE("lambda_rho") {
    auto a = parse_case("A1[1]");
    CHECK(lambda_rho(a, resolve_auto(a, "gamma")) == QVec{Rational(1, 2)});
    auto d = parse_case("D1[6]");
    for (const auto& x : lambda_rho(d, resolve_auto(d, "id"))) CHECK(x == Rational(0));
}

TEST_CASE("fundamental levels") {
    CHECK(kf("A1[1]", "gamma") == 2);
    CHECK(kf("C1[5]", "gamma") == 2);
    CHECK(kf("E1[6]", "gamma") == 1);
    CHECK(kf("E1[7]", "gamma") == 2);
    CHECK(kf("D1[8]", "gamma*sigma") == 1);
    CHECK(kf("D1[6]", "gamma*sigma") == 2);
    CHECK(kf("A1[7]", "gamma^2") == 1);
    CHECK(kf("A1[7]", "gamma") == 2);
}

TEST_CASE("twisted levels") {
    for (const char* c : {"A2[7]", "D2[5]"}) {
        auto ac = parse_case(c);
        auto r = twisted_fundamental_level(ac, resolve_auto(ac, "gamma"));
        CHECK(r.k_f == 1);
        CHECK(r.parity_ok);
    }
}
