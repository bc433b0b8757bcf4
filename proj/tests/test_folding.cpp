#include <doctest.h>

#include "kmfold/folding.hpp"

using namespace kmfold;

namespace {
FoldResult fold_named(const char* c, const char* a) {
    auto ac = parse_case(c);
    return fold(build_affine_cartan(ac).entries, resolve_auto(ac, a).perm);
}
std::string folded(const char* c, const char* a) { return fold_named(c, a).recognized.str(); }
}  // namespace

TEST_CASE("folded types") {
    auto f = fold_named("A1[1]", "gamma");
    CHECK(f.folded == IMat{{0}});
    CHECK(f.recognized.kind == Recognition::Zero);
    CHECK(folded("E1[6]", "gamma") == "G1[2]");
    CHECK(folded("D1[4]", "rho") == "D3[4]");
    CHECK(folded("B1[4]", "gamma") == "A2[6]");
    CHECK(fold_named("B1[4]", "gamma").folded.size() == 4);
    CHECK(folded("A1[5]", "sigma*gamma") == "C1[2]");
    CHECK(folded("C1[5]", "id") == "C1[5]");
}
