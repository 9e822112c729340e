#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graphvn/scalar.hpp"

namespace graphvn {

// Finite weighted multigraph.  Edges are stored as a symmetric multiplicity
// matrix so n_{v,w} is O(1); the two-edge cases are multiplicity 2, not
// parallel edge objects.  Weights need not sum to 1 at rest.
struct WeightedGraph {
    std::vector<std::string> ids;
    std::vector<Scalar> weights;
    std::vector<std::vector<unsigned>> mult;

    std::size_t vertex_count() const { return ids.size(); }
    unsigned edge_units() const;
    Scalar total_weight() const;
    int index_of(std::string_view id) const;  // -1 if absent

    std::size_t add_vertex(std::string id, Scalar weight);
    void add_edge(std::size_t a, std::size_t b, unsigned multiplicity = 1);
    bool connected() const;
};

// alpha_v = sum over neighbors w of n_{v,w} gamma_w.
Scalar alpha(const WeightedGraph& g, std::size_t v);

// Vertices with gamma_v strictly above alpha_v, paired with the excess
// gamma_v - alpha_v.  Real-mode ties resolve to "no atom".
std::vector<std::pair<std::size_t, Scalar>> boundary_set(const WeightedGraph& g);

// Returns human-readable invariant violations; empty means valid.
std::vector<std::string> validate(const WeightedGraph& g);

// Throws InvariantError listing the violations if any.
void require_valid(const WeightedGraph& g);

// Line-oriented format, '#' comments:
//   delta <value>                  (optional; enables qint(k) weights)
//   vertex <id> <weight>           weight: p/q | decimal | qint(k)
//   edge <id> <id> [multiplicity]  multiplicity defaults to 1
// `real_mode` parses weights as high-precision reals instead of rationals.
WeightedGraph parse_graph(std::string_view text, bool real_mode = false);

std::string format_graph(const WeightedGraph& g);

// Quantum integer [k]_q with delta = q + 1/q, via the Chebyshev-style
// recurrence [k+1] = delta [k] - [k-1], [0] = 0, [1] = 1.
Scalar quantum_integer(long k, const Scalar& delta);

}  // namespace graphvn
