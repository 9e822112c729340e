#pragma once

#include <optional>
#include <vector>

#include "graphvn/graph.hpp"
#include "graphvn/vn_algebra.hpp"

namespace graphvn {

// The algebra attached to one edge unit between v and w (gamma_v >= gamma_w):
// a diffuse block of weight 2 gamma_w, an atom of weight gamma_v - gamma_w
// when positive, and one atom per remaining vertex of the graph.
struct EdgeAlgebra {
    std::size_t v, w;  // oriented so gamma_v >= gamma_w
    VNAlgebra algebra; // unnormalized weights summing to the graph's total
};

EdgeAlgebra edge_algebra(const WeightedGraph& g, std::size_t a, std::size_t b);

// ell^infty(Gamma) as a normal-form algebra: one atom per vertex.
VNAlgebra ell_infinity(const WeightedGraph& g);

// Closed form for the free dimension of M(Gamma):
//   1 + T^{-2} ( sum_v sum_w n_{v,w} gamma_v gamma_w - sum_v gamma_v^2 ).
Scalar fdim_closed_form(const WeightedGraph& g);

// The same quantity from additivity over the amalgamated free product:
//   sum over edge units of fdim(A_e) - (units - 1) fdim(ell^infty).
// Agrees with the closed form exactly; kept as an independent oracle.
Scalar fdim_edge_sum(const WeightedGraph& g);

// Decomposition of M(Gamma) into one interpolated free group factor plus
// atoms, with weights kept in the graph's own normalization; `scale` records
// the total weight used to normalize free-dimension arithmetic.
struct Decomposition {
    struct Factor {
        Scalar t;
        Scalar weight;
    };
    bool factor_form = true;
    std::optional<Factor> factor;
    std::vector<std::pair<std::size_t, Scalar>> atoms;  // (vertex, gamma_v - alpha_v)
    Scalar scale;       // total graph weight
    Scalar fdim_value;  // free dimension of the normalized algebra
    std::optional<VNAlgebra> raw;  // set when the graph has fewer than 2 edges

    VNAlgebra to_algebra() const;  // normal form with unnormalized weights
    bool agrees_with(const Decomposition& other) const;
};

// Direct route: atoms from the boundary set, free dimension from the
// closed-form edge/vertex double sum, t solved from the free-dimension
// equation of the normal form.
Decomposition decompose_direct(const WeightedGraph& g);

// An edge-unit build order.  The first two units must form a connected
// two-edge base (a double edge or a path); every later unit must keep the
// touched subgraph connected and may introduce at most one new vertex.
struct BuildOrder {
    std::vector<std::pair<std::size_t, std::size_t>> units;
};

// Breadth-first from the heaviest vertex; deterministic.
BuildOrder default_build_order(const WeightedGraph& g);

struct IncrementalResult {
    Decomposition final;
    // One entry per prefix: the two-edge base first, then one per added unit.
    std::vector<Decomposition> chain;
    std::size_t start_vertex = 0;  // first vertex touched by the build order
};

// Incremental route: two-edge base case analysis, then edge- and
// vertex-addition steps with local atom updates and free-dimension
// bookkeeping through the free-product additivity rule.
IncrementalResult decompose_incremental(const WeightedGraph& g, const BuildOrder& order);
IncrementalResult decompose_incremental(const WeightedGraph& g);

// Parameters of the factor compressed to a base projection (a vertex's
// portion of the factor) along a chain; throws if not strictly increasing.
std::vector<Scalar> embedding_parameter_chain(const std::vector<Decomposition>& chain,
                                              const WeightedGraph& g, std::size_t base_vertex);

}  // namespace graphvn
