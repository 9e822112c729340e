#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphvn/scalar.hpp"

using namespace graphvn;

TEST_CASE("decimal literals parse exactly as rationals") {
    Scalar s = Scalar::parse("0.8");
    CHECK(s.is_rational());
    CHECK(s.eq(Scalar::rational(4, 5)));
    CHECK(Scalar::parse("0.125").eq(Scalar::rational(1, 8)));
    CHECK(Scalar::parse("3/7").eq(Scalar::rational(3, 7)));
    CHECK(Scalar::parse("-2").eq(Scalar(-2)));
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(Scalar::parse(""), ParseError);
    CHECK_THROWS_AS(Scalar::parse("abc"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
}

TEST_CASE("infinity arithmetic") {
    Scalar inf = Scalar::infinity();
    CHECK(inf.is_infinite());
    CHECK((inf + Scalar(5)).is_infinite());
    CHECK((inf * Scalar(2)).is_infinite());
    CHECK_THROWS_AS(inf - inf, NumericError);
    CHECK_THROWS_AS(inf * Scalar(0), NumericError);
    CHECK(inf.compare_exact(Scalar(1000000)) > 0);
    CHECK(Scalar::parse("inf").is_infinite());
}

TEST_CASE("mixed-mode arithmetic promotes and flags") {
    Scalar q = Scalar::rational(1, 3);
    Scalar r = Scalar::real_from("0.5");
    Scalar sum = q + r;
    CHECK(sum.is_real());
    CHECK(sum.promoted());
    Scalar qq = q + q;
    CHECK(qq.is_rational());
    CHECK_FALSE(qq.promoted());
}

TEST_CASE("tolerance-aware equality in real mode") {
    Scalar a = Scalar::real_from("1.0");
    Scalar b = Scalar::real_from("1.0") + Scalar::real_from("1e-30");
    CHECK(a.eq(b));  // far below the 1e-12 tolerance
    Scalar c = Scalar::real_from("1.001");
    CHECK_FALSE(a.eq(c));
    // Rationals stay exact.
    CHECK_FALSE(Scalar::rational(1, 3).eq(Scalar::rational(1, 3) + Scalar::rational(1, 1000000000)));
}

TEST_CASE("exact comparison orders canonically") {
    CHECK(Scalar::rational(1, 2).compare_exact(Scalar::rational(1, 3)) > 0);
    CHECK(Scalar::rational(1, 2).compare_exact(Scalar::rational(1, 2)) == 0);
    CHECK(Scalar::real_from("0.25").compare_exact(Scalar::rational(1, 2)) < 0);
}

TEST_CASE("pow and sqrt") {
    CHECK(Scalar::rational(2, 3).pow_int(3).eq(Scalar::rational(8, 27)));
    CHECK(Scalar(5).pow_int(0).eq(Scalar(1)));
    Scalar r = Scalar::sqrt(Scalar(2));
    CHECK(r.is_real());
    CHECK((r * r).eq(Scalar(2)));
}

TEST_CASE("string forms round-trip") {
    CHECK(Scalar::rational(4, 5).str() == "4/5");
    CHECK(Scalar(7).str() == "7");
    CHECK(Scalar::infinity().str() == "inf");
    CHECK(Scalar::parse(Scalar::rational(-3, 7).str()).eq(Scalar::rational(-3, 7)));
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), NumericError);
}
