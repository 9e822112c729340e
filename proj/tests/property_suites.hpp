#pragma once

// Property suites shared by the property-test binary and the acceptance
// gate.  Each suite returns the number of cases it checked and throws
// graphvn errors on the first failure.

#include <cmath>
#include <random>

#include "graphvn/decompose.hpp"
#include "graphvn/enumerate.hpp"
#include "graphvn/principal.hpp"
#include "graphvn/rmt.hpp"
#include "graphvn/tl.hpp"

namespace suites {

using namespace graphvn;

inline Scalar rand_rational(std::mt19937_64& eng, long max_num = 9, long max_den = 9) {
    long n = 1 + static_cast<long>(eng() % static_cast<unsigned long>(max_num));
    long d = 1 + static_cast<long>(eng() % static_cast<unsigned long>(max_den));
    return Scalar::rational(n, d);
}

inline void require(bool ok, const char* what) {
    if (!ok) throw InvariantError(std::string("property failed: ") + what);
}

// (t_g)_h = t_{gh}, identity at gamma = 1, and inversion.
inline std::size_t amplification_group_law(std::size_t cases, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        Scalar t = Scalar(1) + rand_rational(eng);
        Scalar g = rand_rational(eng), h = rand_rational(eng);
        require(amplify_parameter(amplify_parameter(t, g), h)
                    .eq(amplify_parameter(t, g * h)),
                "amplification composition");
        require(amplify_parameter(t, Scalar(1)).eq(t), "amplification identity");
        require(amplify_parameter(amplify_parameter(t, g), Scalar(1) / g).eq(t),
                "amplification inversion");
    }
    return 3 * cases;
}

// fdim of a compressed pure factor equals the amplified parameter.
inline std::size_t compression_consistency(std::size_t cases, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        Scalar t = Scalar(1) + rand_rational(eng);
        Scalar gamma = rand_rational(eng);
        if (gamma.gt(Scalar(1))) gamma = Scalar(1) / gamma;
        VNAlgebra m({Summand::factor(t, Scalar(1))});
        VNAlgebra c = compress(m, {{0, gamma}});
        require(fdim(c.normalized()).eq(amplify_parameter(t, gamma)),
                "compression fdim consistency");
        require(c.summands()[0].weight.eq(gamma), "compression weight");
    }
    return 2 * cases;
}

// Scaling all vertex weights leaves t and fdim unchanged and scales the
// factor and atom weights linearly.
inline std::size_t scale_covariance(std::size_t cases, std::uint64_t seed) {
    std::size_t checked = 0;
    for (std::size_t i = 0; i < cases; ++i) {
        WeightedGraph g = random_graph(seed + i, 6, 9);
        if (g.edge_units() < 2) continue;
        std::mt19937_64 eng(seed ^ i);
        Scalar c = rand_rational(eng) + Scalar(1);
        WeightedGraph h = g;
        for (auto& w : h.weights) w *= c;
        Decomposition dg = decompose_direct(g), dh = decompose_direct(h);
        require(dg.factor->t.eq(dh.factor->t), "scale-free parameter");
        require(dh.factor->weight.eq(dg.factor->weight * c), "factor weight scaling");
        require(dg.fdim_value.eq(dh.fdim_value), "scale-free fdim");
        require(dg.atoms.size() == dh.atoms.size(), "atom count under scaling");
        for (std::size_t k = 0; k < dg.atoms.size(); ++k)
            require(dh.atoms[k].second.eq(dg.atoms[k].second * c), "atom scaling");
        ++checked;
    }
    return checked;
}

// The decomposition's atoms are exactly the strict-excess vertices.
inline std::size_t atoms_are_boundary_set(std::size_t cases, std::uint64_t seed) {
    std::size_t checked = 0;
    for (std::size_t i = 0; i < cases; ++i) {
        WeightedGraph g = random_graph(seed * 31 + i, 8, 12);
        if (g.edge_units() < 2) continue;
        Decomposition d = decompose_direct(g);
        auto b = boundary_set(g);
        require(d.atoms.size() == b.size(), "atom multiset size");
        for (std::size_t k = 0; k < b.size(); ++k) {
            require(d.atoms[k].first == b[k].first, "atom vertex");
            require(d.atoms[k].second.eq(b[k].second), "atom mass");
            require(b[k].second.eq(g.weights[b[k].first] - alpha(g, b[k].first)),
                    "atom excess formula");
        }
        ++checked;
    }
    return checked;
}

// Direct and incremental routes agree; the free-dimension identity holds.
inline std::size_t route_and_identity(std::size_t cases, std::uint64_t seed) {
    std::size_t checked = 0;
    for (std::size_t i = 0; i < cases; ++i) {
        WeightedGraph g = random_graph(seed * 77 + i, 8, 12);
        require(fdim_closed_form(g).eq(fdim_edge_sum(g)), "free-dimension identity");
        ++checked;
        if (g.edge_units() < 2) continue;
        Decomposition direct = decompose_direct(g);
        IncrementalResult inc = decompose_incremental(g);
        require(direct.agrees_with(inc.final), "route agreement");
        ++checked;
    }
    return checked;
}

// Perron-Frobenius residuals vanish on the builtin families.
inline std::size_t pf_residuals() {
    std::size_t checked = 0;
    for (unsigned n = 2; n <= 20; ++n) {
        require(PrincipalGraph::a_series(n).pf_violations().empty(), "A_n PF residual");
        ++checked;
    }
    for (unsigned n = 4; n <= 20; ++n) {
        require(PrincipalGraph::d_series(n).pf_violations().empty(), "D_n PF residual");
        ++checked;
    }
    for (long num : {2L, 5L, 9L}) {
        PrincipalGraph g = PrincipalGraph::a_infinity(Scalar::rational(num * 2, 2));
        g.truncate(12);
        require(g.pf_violations().empty(), "A_inf PF residual");
        ++checked;
    }
    return checked;
}

// Embedding parameters along incremental chains increase strictly.
inline std::size_t monotone_chains(std::size_t cases, std::uint64_t seed) {
    std::size_t checked = 0;
    for (std::size_t i = 0; i < cases; ++i) {
        WeightedGraph g = random_graph(seed * 131 + i, 7, 10);
        if (g.edge_units() < 2) continue;
        IncrementalResult inc = decompose_incremental(g);
        // The chain call itself throws on any non-strict step.
        auto params = embedding_parameter_chain(inc.chain, g, inc.start_vertex);
        checked += params.size();
    }
    return checked;
}

// Both loop counters agree on random diagram/closure pairs.
inline std::size_t tl_loop_agreement(std::size_t cases, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::size_t checked = 0;
    for (int half = 1; half <= 6; ++half) {
        auto all = noncrossing_pairings(2 * half);
        for (std::size_t i = 0; i < cases / 6 + 1; ++i) {
            const auto& d = all[eng() % all.size()];
            const auto& c = all[eng() % all.size()];
            require(loop_count_traversal(d, c) == loop_count_union_find(d, c),
                    "loop counter agreement");
            ++checked;
        }
    }
    return checked;
}

// Seeded simulations are bit-reproducible.
inline std::size_t simulation_determinism(std::size_t cases, std::uint64_t seed) {
    std::size_t checked = 0;
    for (std::size_t i = 0; i < cases; ++i) {
        EdgeModel m{1.0 + (i % 3), 1.0, 20 + static_cast<int>(i % 4) * 5, 2, seed + i};
        EdgeReport a = simulate_edge(m), b = simulate_edge(m);
        require(a.per_trial == b.per_trial, "per-trial determinism");
        require(a.atom_estimate == b.atom_estimate, "estimate determinism");
        for (int k = 0; k < 4; ++k) require(a.moments[k] == b.moments[k], "moment determinism");
        checked += 6;
    }
    return checked;
}

// Rational field laws on random scalars, exercising the exact backend.
inline std::size_t scalar_field_laws(std::size_t cases, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        Scalar a = rand_rational(eng), b = rand_rational(eng), c = rand_rational(eng);
        require((a + b).eq(b + a), "commutativity");
        require(((a + b) + c).eq(a + (b + c)), "associativity");
        require((a * (b + c)).eq(a * b + a * c), "distributivity");
        require((a / b * b).eq(a), "division inverse");
    }
    return 4 * cases;
}

}  // namespace suites
