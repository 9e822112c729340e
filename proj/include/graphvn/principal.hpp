#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphvn/decompose.hpp"
#include "graphvn/graph.hpp"

namespace graphvn {

// Depth-stratified bipartite graph rooted at * (depth 0, weight 1), with
// Perron-Frobenius weights delta * gamma_v = sum n_{v,w} gamma_w at every
// vertex whose full neighborhood is present.
class PrincipalGraph {
public:
    struct Vertex {
        std::string id;
        unsigned depth;
        Scalar weight;
    };

    // A_n chain with delta = 2 cos(pi/(n+1)) and quantum-integer weights.
    static PrincipalGraph a_series(unsigned n);
    // A_infinity chain; requires delta >= 2.
    static PrincipalGraph a_infinity(Scalar delta);
    // D_n fork with delta = 2 cos(pi/(2n-2)).
    static PrincipalGraph d_series(unsigned n);
    // Builtin by name: "A<n>", "D<n>", or "Ainf" (needs delta).
    static PrincipalGraph builtin(const std::string& name, std::optional<Scalar> delta = {});
    // Graph-file format plus a required `delta` line; depths are recovered by
    // breadth-first distance from the vertex named "*" (or the first vertex).
    static PrincipalGraph from_text(std::string_view text, bool real_mode = true);

    const Scalar& delta() const { return delta_; }
    const std::vector<Vertex>& vertices() const { return verts_; }
    bool infinite() const { return infinite_; }
    // Maximum depth materialized (finite graphs: the true depth).
    unsigned depth() const;

    // Induced weighted graph on depths <= k, unnormalized weights.
    // Finite graphs saturate: k past the full depth returns the whole graph.
    WeightedGraph truncate(unsigned k);
    WeightedGraph full_graph();

    // PF residual violations at interior vertices, plus gamma_* = 1 and
    // gamma_v >= 1 and depth-adjacency checks.
    std::vector<std::string> pf_violations();

private:
    Scalar delta_;
    bool infinite_ = false;
    // File-loaded graphs may be truncations, so their deepest layer is
    // exempt from the PF residual check; builtin finite families are not.
    bool frontier_open_ = false;
    std::vector<Vertex> verts_;
    std::vector<std::vector<unsigned>> mult_;

    void ensure_depth(unsigned k);  // extends A_inf chains on demand
    PrincipalGraph() = default;
};

// t'_k of the truncation sequence: the factor of M(Gamma_k) compressed to
// p_* (trace gamma_* = 1), for k = 2 .. k_max.
std::vector<Scalar> t_prime_sequence(PrincipalGraph& g, unsigned k_max);

struct TruncationRow {
    unsigned k;
    Scalar fdim;
    Scalar t;
    std::vector<std::pair<std::string, Scalar>> atoms;
    Scalar t_prime;
};
std::vector<TruncationRow> truncation_table(PrincipalGraph& g, unsigned k_max);

struct GjsCheck {
    bool applicable = false;
    std::string reason;
    Scalar engine_t;      // t' at full depth
    Scalar global_index;  // I = sum over even-depth vertices of gamma_v^2
    Scalar formula_t;     // 1 + 2 (delta - 1) I
    Scalar difference;
    bool agrees = false;
};

// Finite-depth cross-check of the engine's t' against 1 + 2(delta-1)I.
GjsCheck gjs_finite_depth_check(PrincipalGraph& g);

}  // namespace graphvn
