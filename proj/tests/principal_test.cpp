#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphvn/principal.hpp"

using namespace graphvn;

namespace {
Scalar q(long n, long d) { return Scalar::rational(n, d); }
}

TEST_CASE("A_n weights are quantum integers and satisfy the PF relation") {
    PrincipalGraph g = PrincipalGraph::a_series(4);
    CHECK(g.depth() == 3);
    // delta = golden ratio: delta^2 = delta + 1.
    Scalar d = g.delta();
    CHECK((d * d).eq(d + Scalar(1)));
    CHECK(g.vertices()[0].weight.eq(Scalar(1)));
    CHECK(g.vertices()[1].weight.eq(d));
    CHECK(g.pf_violations().empty());
}

TEST_CASE("A_infinity at delta 2 has integer weights 1, 2, 3, ...") {
    PrincipalGraph g = PrincipalGraph::a_infinity(Scalar(2));
    WeightedGraph t = g.truncate(5);
    REQUIRE(t.vertex_count() == 6);
    for (long k = 0; k <= 5; ++k)
        CHECK(t.weights[static_cast<std::size_t>(k)].eq(Scalar(k + 1)));
    CHECK(g.pf_violations().empty());
    CHECK_THROWS_AS(PrincipalGraph::a_infinity(q(3, 2)), InvariantError);
    CHECK_THROWS_AS(g.full_graph(), InvariantError);
}

TEST_CASE("D_n has two tail vertices of weight [n-1]/2") {
    PrincipalGraph g = PrincipalGraph::d_series(4);
    // delta = 2 cos(pi/6) = sqrt(3); [3] = delta^2 - 1 = 2, tails weigh 1.
    const auto& vs = g.vertices();
    REQUIRE(vs.size() == 4);
    CHECK(vs[2].depth == vs[3].depth);
    CHECK(vs[2].weight.eq(Scalar(1)));
    CHECK(vs[3].weight.eq(Scalar(1)));
    CHECK(g.pf_violations().empty());
}

TEST_CASE("builtin name parsing") {
    CHECK_NOTHROW(PrincipalGraph::builtin("A5"));
    CHECK_NOTHROW(PrincipalGraph::builtin("D6"));
    CHECK_NOTHROW(PrincipalGraph::builtin("Ainf", Scalar(2)));
    CHECK_THROWS_AS(PrincipalGraph::builtin("Ainf"), InvariantError);
    CHECK_THROWS_AS(PrincipalGraph::builtin("E8"), InvariantError);
    CHECK_THROWS_AS(PrincipalGraph::builtin("Axyz"), InvariantError);
}

TEST_CASE("from_text recovers depths and requires delta") {
    PrincipalGraph g = PrincipalGraph::from_text(
        "delta 2\nvertex * 1\nvertex a 2\nvertex b 3\nedge * a\nedge a b\n", false);
    CHECK(g.depth() == 2);
    CHECK(g.pf_violations().empty());
    CHECK_THROWS_AS(
        PrincipalGraph::from_text("vertex * 1\nvertex a 1\nedge * a\n", false), ParseError);
}

TEST_CASE("pf_violations flags a broken weight") {
    PrincipalGraph g = PrincipalGraph::from_text(
        "delta 2\nvertex * 1\nvertex a 3\nvertex b 5\nedge * a\nedge a b\n", false);
    CHECK_FALSE(g.pf_violations().empty());
}

TEST_CASE("truncation saturates for finite graphs") {
    PrincipalGraph g = PrincipalGraph::a_series(3);
    WeightedGraph full = g.truncate(10);
    CHECK(full.vertex_count() == 3);
}

TEST_CASE("t' sequence for A_infinity at delta 2 starts 4, 12, 27, 51") {
    PrincipalGraph g = PrincipalGraph::a_infinity(Scalar(2));
    auto seq = t_prime_sequence(g, 5);
    REQUIRE(seq.size() == 4);
    CHECK(seq[0].eq(Scalar(4)));
    CHECK(seq[1].eq(Scalar(12)));
    CHECK(seq[2].eq(Scalar(27)));
    CHECK(seq[3].eq(Scalar(51)));
}

TEST_CASE("truncation rows carry the frontier atom") {
    PrincipalGraph g = PrincipalGraph::a_infinity(Scalar(2));
    auto rows = truncation_table(g, 3);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].k == 2);
    REQUIRE(rows[0].atoms.size() == 1);
    CHECK(rows[0].atoms[0].first == "v2");
    CHECK(rows[0].atoms[0].second.eq(Scalar(1)));  // gamma_2 - gamma_1 = 3 - 2
}

TEST_CASE("gjs check agrees exactly on A_3") {
    PrincipalGraph g = PrincipalGraph::a_series(3);
    GjsCheck c = gjs_finite_depth_check(g);
    REQUIRE(c.applicable);
    // I = 1 + [3]^2 = 1 + 1 = 2 at delta = sqrt 2.
    CHECK(c.global_index.eq(Scalar(2)));
    CHECK(c.agrees);
    CHECK(abs(c.difference).lt(Scalar::real_from("1e-9")));
}

TEST_CASE("gjs check agrees exactly on A_4") {
    PrincipalGraph g = PrincipalGraph::a_series(4);
    GjsCheck c = gjs_finite_depth_check(g);
    REQUIRE(c.applicable);
    // I = 1 + [3]^2 = 2 + delta at the golden ratio.
    CHECK(c.global_index.eq(Scalar(2) + g.delta()));
    CHECK(c.agrees);
}

TEST_CASE("gjs check reports inapplicable cases with a reason") {
    PrincipalGraph g = PrincipalGraph::a_infinity(Scalar(2));
    GjsCheck c = gjs_finite_depth_check(g);
    CHECK_FALSE(c.applicable);
    CHECK_FALSE(c.reason.empty());
}
