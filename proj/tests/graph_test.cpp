#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphvn/graph.hpp"

using namespace graphvn;

namespace {
Scalar q(long n, long d) { return Scalar::rational(n, d); }
}

TEST_CASE("parse the line format") {
    WeightedGraph g = parse_graph("# comment\nvertex a 1/2\nvertex b 0.25\n\nedge a b 2\n");
    REQUIRE(g.vertex_count() == 2);
    CHECK(g.weights[0].eq(q(1, 2)));
    CHECK(g.weights[1].eq(q(1, 4)));
    CHECK(g.mult[0][1] == 2);
    CHECK(g.edge_units() == 2);
    CHECK(g.total_weight().eq(q(3, 4)));
}

TEST_CASE("qint weights need a delta line") {
    WeightedGraph g = parse_graph("delta 2\nvertex a qint(1)\nvertex b qint(2)\nedge a b\n");
    CHECK(g.weights[0].eq(Scalar(1)));
    CHECK(g.weights[1].eq(Scalar(2)));
    CHECK_THROWS_AS(parse_graph("vertex a qint(2)\n"), ParseError);
}

TEST_CASE("parse errors carry line information") {
    CHECK_THROWS_AS(parse_graph("vertex a\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("edge a b\n"), ParseError);          // unknown vertices
    CHECK_THROWS_AS(parse_graph("squiggle\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertex a 1\nvertex a 1\n"), ParseError);  // duplicate id
}

TEST_CASE("validation catches structural problems") {
    WeightedGraph g;
    g.add_vertex("a", Scalar(1));
    g.add_vertex("b", Scalar(1));
    CHECK_FALSE(validate(g).empty());  // disconnected (no edges)
    g.add_edge(0, 1);
    CHECK(validate(g).empty());
    CHECK_THROWS_AS(g.add_edge(0, 0), InvariantError);  // self-loop

    WeightedGraph h;
    h.add_vertex("a", Scalar(0));
    CHECK_FALSE(validate(h).empty());  // non-positive weight
}

TEST_CASE("alpha sums neighbor weights with multiplicity") {
    WeightedGraph g = parse_graph("vertex a 1\nvertex b 1/3\nvertex c 1/4\nedge a b 2\nedge a c\n");
    CHECK(alpha(g, 0).eq(q(2, 3) + q(1, 4)));
    CHECK(alpha(g, 1).eq(Scalar(2)));
}

TEST_CASE("boundary set is strict excess only") {
    // a = 1 vs alpha_a = 2/3 + 1/4: atom. b, c dominated: no atom.
    WeightedGraph g = parse_graph("vertex a 1\nvertex b 1/3\nvertex c 1/4\nedge a b 2\nedge a c\n");
    auto b = boundary_set(g);
    REQUIRE(b.size() == 1);
    CHECK(b[0].first == 0);
    CHECK(b[0].second.eq(Scalar(1) - q(2, 3) - q(1, 4)));

    // Balanced double edge: gamma = alpha exactly, tie resolves to no atom.
    WeightedGraph h = parse_graph("vertex a 1/2\nvertex b 1/4\nedge a b 2\n");
    CHECK(boundary_set(h).empty());
}

TEST_CASE("format round-trips") {
    WeightedGraph g = parse_graph("vertex a 4/5\nvertex b 1/5\nedge a b 2\n");
    WeightedGraph h = parse_graph(format_graph(g));
    CHECK(h.vertex_count() == g.vertex_count());
    CHECK(h.weights[0].eq(g.weights[0]));
    CHECK(h.mult[0][1] == g.mult[0][1]);
}

TEST_CASE("quantum integers follow the Chebyshev recurrence") {
    Scalar d(2);
    CHECK(quantum_integer(0, d).eq(Scalar(0)));
    CHECK(quantum_integer(1, d).eq(Scalar(1)));
    CHECK(quantum_integer(4, d).eq(Scalar(4)));  // [k] = k at delta = 2
    Scalar root2 = Scalar::sqrt(Scalar(2));
    CHECK(quantum_integer(2, root2).eq(root2));
    CHECK(quantum_integer(3, root2).eq(Scalar(1)));  // 2 - 1
}

TEST_CASE("real mode parses weights as reals") {
    WeightedGraph g = parse_graph("vertex a 0.5\nvertex b 0.5\nedge a b 2\n", true);
    CHECK(g.weights[0].is_real());
}
