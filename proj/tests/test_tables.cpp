#include <doctest.h>

#include "kmfold/report.hpp"

using namespace kmfold;

namespace {
const TableRecord* find(const TableReport& t, const char* c, const char* a) {
    for (const auto& r : t.rows)
        if (r.c.str() == c && r.auto_name == a) return &r;
    return nullptr;
}
}  // namespace

TEST_CASE("table rows") {
    auto t5 = build_table(5);
    auto r = find(t5, "E1[7]", "gamma");
    REQUIRE(r);
    CHECK(r->computed == 2);
    CHECK(r->status == "match");

    auto t2 = build_table(2, 6);
    auto b = find(t2, "B1[3]", "gamma");
    REQUIRE(b);
    CHECK(b->status == "match");
    CHECK(value_str(2, b->computed) == "(t-1)(t^3-1)");

    auto t3 = build_table(3);
    auto e = find(t3, "E1[6]", "sigma");
    REQUIRE(e);
    CHECK(e->status == "paper-typo-suspected");
}

TEST_CASE("concurrent build keeps order and content") {
    auto a = build_tables({3, 1, 2});
    REQUIRE(a.size() == 3);
    CHECK(a[0].table == 3);
    CHECK(render(a, "json") == render({build_table(3), build_table(1), build_table(2)}, "json"));
}

TEST_CASE("case records") {
    CHECK(case_record("D1[4]", "rho", "fold")["folded_case"] == "D3[4]");
    auto s = case_record("A1[1]", "gamma", "section");
    CHECK(s["schema"] == "kmfold/1");
    CHECK(s["k"] == 1);
    CHECK(s["b"] == json::array({1, 0}));
    CHECK(s["p"] == 2);
    CHECK(case_record("A1[1]", "id", "fold")["folded_case"] == "A1[1]");
    CHECK_THROWS_AS(case_record("A1[1]", "rho", "fold"), CaseError);
    CHECK_THROWS_AS(case_record("Q1[1]", "id", "fold"), CaseError);
}
