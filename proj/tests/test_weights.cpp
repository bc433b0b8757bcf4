#include <doctest.h>

#include "kmfold/weights.hpp"

using namespace kmfold;

namespace {
WeightSetup ws(const char* c, const char* a) {
    auto ac = parse_case(c);
    return weight_setup(ac, resolve_auto(ac, a));
}
}  // namespace

TEST_CASE("invariant fundamental weights") {
    auto w = ws("A1[3]", "sigma");
    auto l = big_lambda(w, 1);
    CHECK(l.coords == QVec{Rational(0), Rational(1), Rational(0), Rational(1)});
    CHECK(level(w, l) == Rational(2));

    auto id = ws("A1[3]", "id");
    CHECK(big_lambda(id, 2).coords == QVec{Rational(0), Rational(0), Rational(1), Rational(0)});
}

TEST_CASE("n_max of Lambda_i is zero") {
    auto w = ws("D1[5]", "sigma");
    for (int i = 0; i < w.s(); ++i) {
        IVec n(w.s(), 0);
        n[i] = 1;
        CHECK(n_max(w, i, InvariantWeight{n, Rational(0)}) == std::optional<std::int64_t>(0));
    }
}

TEST_CASE("D-sets against brute force") {
    for (auto [c, a] : {std::pair{"A1[3]", "sigma"}, {"B1[4]", "gamma"}, {"C1[3]", "id"}, {"D1[4]", "rho"}}) {
        auto w = ws(c, a);
        for (int i = 0; i < w.s(); ++i) {
            std::vector<IVec> got;
            for (const auto& e : d_set_mod_delta(w, i)) got.push_back(e.weight.n);
            CHECK(got == d_set_brute_force(w, i));
        }
    }
}

TEST_CASE("degenerate fold has no weight setup") {
    auto a = parse_case("A1[4]");
    CHECK_THROWS_AS(weight_setup(a, resolve_auto(a, "gamma")), CaseError);
}

TEST_CASE("Jacobian structure") {
    auto w = ws("E1[6]", "sigma");
    auto sp = jacobian_sparsity(w);
    CHECK(sp.block_upper_triangular);
    CHECK(cyclic_strictness(w));
}
