#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphvn/vn_algebra.hpp"

using namespace graphvn;

namespace {
Scalar q(long n, long d) { return Scalar::rational(n, d); }
}

TEST_CASE("summand factories enforce invariants") {
    CHECK_THROWS_AS(Summand::factor(Scalar(1), Scalar(1)), InvariantError);   // t must exceed 1
    CHECK_THROWS_AS(Summand::factor(q(1, 2), Scalar(1)), InvariantError);
    CHECK_NOTHROW(Summand::factor(Scalar::infinity(), Scalar(1)));
    CHECK_THROWS_AS(VNAlgebra({Summand::atom(Scalar(0))}), InvariantError);   // weights > 0
}

TEST_CASE("canonical order puts factors first by descending weight") {
    VNAlgebra a({Summand::atom(q(1, 4), "p"), Summand::factor(Scalar(2), q(1, 4)),
                 Summand::factor(Scalar(3), q(1, 2))});
    REQUIRE(a.summands().size() == 3);
    CHECK(a.summands()[0].kind == SummandKind::FreeGroupFactor);
    CHECK(a.summands()[0].weight.eq(q(1, 2)));
    CHECK(a.summands()[1].weight.eq(q(1, 4)));
    CHECK(a.summands()[2].kind == SummandKind::MatrixAlgebra);
}

TEST_CASE("fdim of a single factor is its parameter") {
    VNAlgebra m({Summand::factor(q(3, 2), Scalar(1))});
    CHECK(fdim(m).eq(q(3, 2)));
}

TEST_CASE("fdim mixes factors and atoms") {
    // L(F_2)_{1/2} + C_{1/2}: 1 + (1/4)(2-1) - 1/4 = 1.
    VNAlgebra m({Summand::factor(Scalar(2), q(1, 2)), Summand::atom(q(1, 2))});
    CHECK(fdim(m).eq(Scalar(1)));
}

TEST_CASE("fdim of matrix summands uses minimal projection traces") {
    // M_2 with weight 1: alpha = 1/2, fdim = 1 - 1/4.
    VNAlgebra m({Summand::matrix(2, Scalar(1))});
    CHECK(fdim(m).eq(q(3, 4)));
}

TEST_CASE("fdim requires normalization") {
    VNAlgebra m({Summand::atom(q(1, 2))});
    CHECK_THROWS_AS(fdim(m), InvariantError);
}

TEST_CASE("infinite parameter propagates to fdim") {
    VNAlgebra m({Summand::factor(Scalar::infinity(), Scalar(1))});
    CHECK(fdim(m).is_infinite());
}

TEST_CASE("free product additivity is fdim(M1)+fdim(M2)-fdim(D)") {
    VNAlgebra m1({Summand::factor(Scalar(2), Scalar(1))});
    VNAlgebra m2({Summand::factor(q(3, 2), Scalar(1))});
    VNAlgebra d({Summand::atom(q(1, 2), "a"), Summand::atom(q(1, 2), "b")});
    CHECK(fdim_free_product(m1, m2, d).eq(Scalar(2) + q(3, 2) - q(1, 2)));
}

TEST_CASE("free product over a nonabelian D is rejected") {
    VNAlgebra m({Summand::factor(Scalar(2), Scalar(1))});
    VNAlgebra d({Summand::matrix(2, Scalar(1))});
    CHECK_THROWS_AS(fdim_free_product(m, m, d), InvariantError);
}

TEST_CASE("amplification formula and group law") {
    // L(F_2)_{1/2} = L(F_5).
    CHECK(amplify_parameter(Scalar(2), q(1, 2)).eq(Scalar(5)));
    // gamma = 1 is the identity.
    CHECK(amplify_parameter(q(7, 3), Scalar(1)).eq(q(7, 3)));
    // Composition: (t_g)_h = t_{gh}.
    Scalar t = q(9, 4), g = q(2, 3), h = q(3, 5);
    CHECK(amplify_parameter(amplify_parameter(t, g), h).eq(amplify_parameter(t, g * h)));
}

TEST_CASE("amplify rescales a single factor") {
    VNAlgebra m({Summand::factor(Scalar(2), Scalar(1))});
    VNAlgebra a = amplify(m, q(1, 2));
    REQUIRE(a.summands().size() == 1);
    CHECK(a.summands()[0].parameter.eq(Scalar(5)));
    CHECK(a.summands()[0].weight.eq(q(1, 2)));
}

TEST_CASE("compress cuts factors and matrix algebras") {
    VNAlgebra m({Summand::factor(Scalar(2), q(1, 2)), Summand::matrix(2, q(1, 2))});
    // Keep half of the factor, drop the matrix part.
    VNAlgebra c = compress(m, {{0, q(1, 4)}});
    REQUIRE(c.summands().size() == 1);
    CHECK(c.summands()[0].parameter.eq(amplify_parameter(Scalar(2), q(1, 2))));
    CHECK(c.summands()[0].weight.eq(q(1, 4)));
}

TEST_CASE("compression consistency with fdim") {
    // fdim of the compression of a pure factor matches the amplified parameter.
    Scalar t = q(5, 3), gamma = q(2, 5);
    VNAlgebra m({Summand::factor(t, Scalar(1))});
    VNAlgebra c = compress(m, {{0, gamma}});
    CHECK(fdim(c.normalized()).eq(amplify_parameter(t, gamma)));
}

TEST_CASE("direct sum rescales blocks to the requested weights") {
    VNAlgebra m1({Summand::factor(Scalar(2), Scalar(1))});
    VNAlgebra m2({Summand::atom(Scalar(1))});
    VNAlgebra s = direct_sum({{m1, q(3, 4)}, {m2, q(1, 4)}});
    CHECK(s.total_weight().eq(Scalar(1)));
    CHECK(s.summands()[0].weight.eq(q(3, 4)));
}

TEST_CASE("structural equality ignores labels but not weights") {
    VNAlgebra a({Summand::factor(Scalar(2), q(1, 2)), Summand::atom(q(1, 2), "x")});
    VNAlgebra b({Summand::factor(Scalar(2), q(1, 2)), Summand::atom(q(1, 2), "y")});
    VNAlgebra c({Summand::factor(Scalar(2), q(1, 3)), Summand::atom(q(2, 3), "x")});
    CHECK(a.structurally_equal(b));
    CHECK_FALSE(a.structurally_equal(c));
}
