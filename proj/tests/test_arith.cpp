#include <doctest.h>

#include "kmfold/expr.hpp"
#include "kmfold/poly.hpp"

using namespace kmfold;

TEST_CASE("rational arithmetic is exact and normalized") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK((a * b).str() == "1/18");
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK((Rational(3) / Rational(3)).is_integer());
}

TEST_CASE("rational overflow is detected") {
    Rational big(INT64_MAX);
    CHECK_THROWS(big + Rational(1));
}

TEST_CASE("polynomial division and factoring") {
    Poly p = Poly::t_pow_minus_one(3) * Poly::t_pow_minus_one(5);
    CHECK(p.divisible_by(Poly::t_pow_minus_one(1)));
    CHECK(p / Poly::t_pow_minus_one(3) == Poly::t_pow_minus_one(5));
    CHECK(p.factored() == "(t^3-1)(t^5-1)");
    CHECK_FALSE(Poly::t_pow_minus_one(2).divisible_by(Poly::t_pow_minus_one(3)));
}

TEST_CASE("expressions evaluate integers and polynomials") {
    Env env{{"n", 7}};
    CHECK(eval_int("(n+1)/2", env) == 4);
    CHECK_THROWS(eval_int("n/2", env));
    CHECK(Expr("(t-1)*(t^(n-2)-1)").eval_poly(env) ==
          Poly::t_pow_minus_one(1) * Poly::t_pow_minus_one(5));
}
