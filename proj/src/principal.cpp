#include "graphvn/principal.hpp"

#include <boost/math/constants/constants.hpp>

#include <sstream>

namespace graphvn {

namespace {

Scalar two_cos_pi_over(unsigned m) {
    Real pi = boost::math::constants::pi<Real>();
    return Scalar::real(2 * cos(pi / m));
}

}  // namespace

PrincipalGraph PrincipalGraph::a_series(unsigned n) {
    if (n < 2) throw InvariantError("A_n needs n >= 2");
    PrincipalGraph g;
    g.delta_ = two_cos_pi_over(n + 1);
    for (unsigned d = 0; d < n; ++d) {
        g.verts_.push_back({d == 0 ? "*" : "v" + std::to_string(d), d,
                            quantum_integer(d + 1, g.delta_)});
    }
    g.mult_.assign(n, std::vector<unsigned>(n, 0));
    for (unsigned d = 0; d + 1 < n; ++d) g.mult_[d][d + 1] = g.mult_[d + 1][d] = 1;
    return g;
}

PrincipalGraph PrincipalGraph::a_infinity(Scalar delta) {
    if (!delta.ge(Scalar(2))) throw InvariantError("A_infinity requires delta >= 2");
    PrincipalGraph g;
    g.delta_ = std::move(delta);
    g.infinite_ = true;
    g.verts_.push_back({"*", 0, Scalar(1)});
    g.mult_.assign(1, std::vector<unsigned>(1, 0));
    g.ensure_depth(2);
    return g;
}

PrincipalGraph PrincipalGraph::d_series(unsigned n) {
    if (n < 4) throw InvariantError("D_n needs n >= 4");
    PrincipalGraph g;
    g.delta_ = two_cos_pi_over(2 * n - 2);
    unsigned chain = n - 2;  // depths 0 .. n-3
    for (unsigned d = 0; d < chain; ++d)
        g.verts_.push_back({d == 0 ? "*" : "v" + std::to_string(d), d,
                            quantum_integer(d + 1, g.delta_)});
    Scalar tail = quantum_integer(n - 1, g.delta_) / Scalar(2);
    g.verts_.push_back({"u1", chain, tail});
    g.verts_.push_back({"u2", chain, tail});
    g.mult_.assign(n, std::vector<unsigned>(n, 0));
    for (unsigned d = 0; d + 1 < chain; ++d) g.mult_[d][d + 1] = g.mult_[d + 1][d] = 1;
    g.mult_[chain - 1][chain] = g.mult_[chain][chain - 1] = 1;
    g.mult_[chain - 1][chain + 1] = g.mult_[chain + 1][chain - 1] = 1;
    return g;
}

PrincipalGraph PrincipalGraph::builtin(const std::string& name, std::optional<Scalar> delta) {
    if (name == "Ainf" || name == "A_inf" || name == "Ainfinity") {
        if (!delta) throw InvariantError("builtin Ainf requires a delta parameter");
        return a_infinity(*delta);
    }
    if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'D')) {
        unsigned n;
        try {
            n = static_cast<unsigned>(std::stoul(name.substr(1)));
        } catch (const std::exception&) {
            throw InvariantError("unknown builtin principal graph '" + name + "'");
        }
        return name[0] == 'A' ? a_series(n) : d_series(n);
    }
    throw InvariantError("unknown builtin principal graph '" + name + "'");
}

PrincipalGraph PrincipalGraph::from_text(std::string_view text, bool real_mode) {
    // Reuse the weighted-graph format; a delta line is mandatory here.
    std::string body(text);
    WeightedGraph wg = parse_graph(body, real_mode);
    require_valid(wg);
    std::size_t delta_pos = body.find("delta");
    if (delta_pos == std::string::npos)
        throw ParseError("principal graph file needs a delta line");
    std::istringstream ds(body.substr(delta_pos + 5));
    std::string dval;
    ds >> dval;
    PrincipalGraph g;
    g.delta_ = Scalar::parse(dval, real_mode);
    if (!g.delta_.gt(Scalar(1))) throw InvariantError("delta must exceed 1");
    int root = wg.index_of("*");
    if (root < 0) root = 0;
    // Depths by BFS distance from the root.
    std::vector<int> depth(wg.vertex_count(), -1);
    std::vector<std::size_t> queue{static_cast<std::size_t>(root)};
    depth[root] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        std::size_t v = queue[qi];
        for (std::size_t w = 0; w < wg.vertex_count(); ++w)
            if (wg.mult[v][w] > 0 && depth[w] < 0) {
                depth[w] = depth[v] + 1;
                queue.push_back(w);
            }
    }
    g.frontier_open_ = true;
    g.verts_.resize(wg.vertex_count());
    for (std::size_t v = 0; v < wg.vertex_count(); ++v)
        g.verts_[v] = {wg.ids[v], static_cast<unsigned>(depth[v]), wg.weights[v]};
    g.mult_ = wg.mult;
    return g;
}

unsigned PrincipalGraph::depth() const {
    unsigned d = 0;
    for (const auto& v : verts_) d = std::max(d, v.depth);
    return d;
}

void PrincipalGraph::ensure_depth(unsigned k) {
    if (!infinite_) return;
    // A_infinity chain: append vertices by the weight recurrence
    // gamma_{d+1} = delta gamma_d - gamma_{d-1}.
    while (depth() < k) {
        unsigned d = depth() + 1;
        Scalar prev = verts_.back().weight;
        Scalar before = verts_.size() >= 2 ? verts_[verts_.size() - 2].weight : Scalar(0);
        Scalar next = delta_ * prev - before;
        verts_.push_back({"v" + std::to_string(d), d, next});
        for (auto& row : mult_) row.push_back(0);
        mult_.emplace_back(verts_.size(), 0u);
        mult_[verts_.size() - 2][verts_.size() - 1] = 1;
        mult_[verts_.size() - 1][verts_.size() - 2] = 1;
    }
}

WeightedGraph PrincipalGraph::truncate(unsigned k) {
    if (k < 1) throw InvariantError("truncation depth must be at least 1");
    ensure_depth(k);
    WeightedGraph out;
    std::vector<int> sub(verts_.size(), -1);
    for (std::size_t v = 0; v < verts_.size(); ++v)
        if (verts_[v].depth <= k)
            sub[v] = static_cast<int>(out.add_vertex(verts_[v].id, verts_[v].weight));
    for (std::size_t v = 0; v < verts_.size(); ++v)
        for (std::size_t w = v + 1; w < verts_.size(); ++w)
            if (sub[v] >= 0 && sub[w] >= 0 && mult_[v][w] > 0)
                out.add_edge(static_cast<std::size_t>(sub[v]),
                             static_cast<std::size_t>(sub[w]), mult_[v][w]);
    return out;
}

WeightedGraph PrincipalGraph::full_graph() {
    if (infinite_)
        throw InvariantError("infinite principal graph has no full graph; truncate instead");
    return truncate(std::max(1u, depth()));
}

std::vector<std::string> PrincipalGraph::pf_violations() {
    std::vector<std::string> out;
    const Scalar one(1);
    unsigned frontier = depth();
    for (std::size_t v = 0; v < verts_.size(); ++v) {
        if (verts_[v].depth == 0 && !verts_[v].weight.eq(one))
            out.push_back("root weight is " + verts_[v].weight.str() + ", expected 1");
        if (verts_[v].weight.lt(one))
            out.push_back("vertex " + verts_[v].id + " has weight below 1");
        for (std::size_t w = 0; w < verts_.size(); ++w)
            if (mult_[v][w] > 0 &&
                (verts_[v].depth > verts_[w].depth ? verts_[v].depth - verts_[w].depth
                                                   : verts_[w].depth - verts_[v].depth) != 1)
                out.push_back("edge " + verts_[v].id + "-" + verts_[w].id +
                              " does not connect adjacent depths");
        bool interior = (!infinite_ && !frontier_open_) || verts_[v].depth < frontier;
        if (!interior) continue;
        Scalar nbr(0);
        for (std::size_t w = 0; w < verts_.size(); ++w)
            if (mult_[v][w] > 0)
                nbr += Scalar(static_cast<long>(mult_[v][w])) * verts_[w].weight;
        Scalar residual = abs(delta_ * verts_[v].weight - nbr);
        if (!residual.is_zero())
            out.push_back("Perron-Frobenius residual " + residual.str() + " at " + verts_[v].id);
    }
    return out;
}

namespace {

Scalar compress_to_root(const Decomposition& d, const WeightedGraph& g) {
    if (!d.factor_form || !d.factor)
        throw InvariantError("truncation did not decompose to factor form");
    int root = g.index_of("*");
    if (root < 0) root = 0;
    Scalar root_trace = g.weights[static_cast<std::size_t>(root)];
    for (const auto& [v, a] : d.atoms)
        if (v == static_cast<std::size_t>(root)) root_trace -= a;
    if (!root_trace.is_positive())
        throw InvariantError("root projection vanishes inside the factor");
    return amplify_parameter(d.factor->t, root_trace / d.factor->weight);
}

}  // namespace

std::vector<TruncationRow> truncation_table(PrincipalGraph& g, unsigned k_max) {
    if (k_max < 2) throw InvariantError("truncation sequence starts at k = 2");
    std::vector<TruncationRow> rows;
    for (unsigned k = 2; k <= k_max; ++k) {
        WeightedGraph gk = g.truncate(k);
        Decomposition d = decompose_direct(gk);
        TruncationRow row{k, d.fdim_value, d.factor->t, {}, compress_to_root(d, gk)};
        for (const auto& [v, a] : d.atoms) row.atoms.emplace_back(gk.ids[v], a);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Scalar> t_prime_sequence(PrincipalGraph& g, unsigned k_max) {
    std::vector<Scalar> out;
    for (const auto& row : truncation_table(g, k_max)) out.push_back(row.t_prime);
    return out;
}

GjsCheck gjs_finite_depth_check(PrincipalGraph& g) {
    GjsCheck check;
    if (g.infinite()) {
        check.reason = "graph has infinite depth";
        return check;
    }
    WeightedGraph full = g.full_graph();
    Decomposition d = decompose_direct(full);
    if (!d.factor_form || !d.atoms.empty()) {
        check.reason = "atoms present at full depth; compression to p_* is not a plain factor";
        return check;
    }
    check.applicable = true;
    check.engine_t = compress_to_root(d, full);
    // Global index taken as the even-depth squared-weight sum; confirmed
    // numerically on the A_n inputs rather than assumed.
    Scalar index(0);
    for (const auto& v : g.vertices())
        if (v.depth % 2 == 0) index += v.weight.squared();
    check.global_index = index;
    check.formula_t = Scalar(1) + Scalar(2) * (g.delta() - Scalar(1)) * index;
    check.difference = check.engine_t - check.formula_t;
    check.agrees = check.difference.is_zero();
    return check;
}

}  // namespace graphvn
