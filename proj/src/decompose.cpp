#include "graphvn/decompose.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace graphvn {

VNAlgebra ell_infinity(const WeightedGraph& g) {
    std::vector<Summand> parts;
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
        parts.push_back(Summand::atom(g.weights[u], g.ids[u]));
    return VNAlgebra(std::move(parts));
}

Scalar fdim_closed_form(const WeightedGraph& g) {
    Scalar double_sum(0), square_sum(0);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        square_sum += g.weights[v].squared();
        for (std::size_t w = 0; w < g.vertex_count(); ++w)
            if (g.mult[v][w] > 0)
                double_sum += Scalar(static_cast<long>(g.mult[v][w])) * g.weights[v] * g.weights[w];
    }
    Scalar t2 = g.total_weight().squared();
    return Scalar(1) + (double_sum - square_sum) / t2;
}

namespace {

// Solves fdim = 1 + wf^2 (t - 1) - sum a_i^2 for t, everything normalized.
Scalar solve_parameter(const Scalar& fdim_norm, const Scalar& atom_square_sum,
                       const Scalar& factor_weight_norm) {
    if (!factor_weight_norm.is_positive())
        throw InvariantError("factor weight vanished; graph is not in factor form");
    Scalar t = Scalar(1) + (fdim_norm - Scalar(1) + atom_square_sum) /
                               factor_weight_norm.squared();
    if (!t.gt(Scalar(1)))
        throw NumericError("solved factor parameter t = " + t.str() + " is not > 1");
    return t;
}

Scalar atom_square_sum_normalized(const std::vector<std::pair<std::size_t, Scalar>>& atoms,
                                  const Scalar& total) {
    Scalar s(0);
    for (const auto& [v, a] : atoms) s += (a / total).squared();
    return s;
}

}  // namespace

EdgeAlgebra edge_algebra(const WeightedGraph& g, std::size_t a, std::size_t b) {
    if (a >= g.vertex_count() || b >= g.vertex_count() || a == b)
        throw InvariantError("edge_algebra needs two distinct vertices of the graph");
    std::size_t v = a, w = b;
    if (g.weights[w].compare_exact(g.weights[v]) > 0) std::swap(v, w);
    std::vector<Summand> parts;
    parts.push_back(Summand::diffuse(Scalar(2) * g.weights[w], g.ids[v] + "~" + g.ids[w]));
    Scalar atom = g.weights[v] - g.weights[w];
    if (atom.is_positive()) parts.push_back(Summand::atom(atom, g.ids[v]));
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
        if (u != v && u != w) parts.push_back(Summand::atom(g.weights[u], g.ids[u]));
    return EdgeAlgebra{v, w, VNAlgebra(std::move(parts))};
}

Scalar fdim_edge_sum(const WeightedGraph& g) {
    require_valid(g);
    Scalar base = fdim(ell_infinity(g).normalized());
    Scalar acc = base;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        for (std::size_t w = v + 1; w < g.vertex_count(); ++w)
            for (unsigned k = 0; k < g.mult[v][w]; ++k)
                acc += fdim(edge_algebra(g, v, w).algebra.normalized()) - base;
    return acc;
}

VNAlgebra Decomposition::to_algebra() const {
    if (!factor_form && raw) return *raw;
    std::vector<Summand> parts;
    if (factor) parts.push_back(Summand::factor(factor->t, factor->weight));
    for (const auto& [v, a] : atoms) parts.push_back(Summand::atom(a, std::to_string(v)));
    return VNAlgebra(std::move(parts));
}

bool Decomposition::agrees_with(const Decomposition& other) const {
    if (factor_form != other.factor_form) return false;
    if (factor.has_value() != other.factor.has_value()) return false;
    if (factor && (!factor->t.eq(other.factor->t) || !factor->weight.eq(other.factor->weight)))
        return false;
    if (atoms.size() != other.atoms.size()) return false;
    auto mine = atoms, theirs = other.atoms;
    auto by_vertex = [](const auto& x, const auto& y) { return x.first < y.first; };
    std::sort(mine.begin(), mine.end(), by_vertex);
    std::sort(theirs.begin(), theirs.end(), by_vertex);
    for (std::size_t i = 0; i < mine.size(); ++i)
        if (mine[i].first != theirs[i].first || !mine[i].second.eq(theirs[i].second)) return false;
    return true;
}

Decomposition decompose_direct(const WeightedGraph& g) {
    require_valid(g);
    Decomposition d;
    d.scale = g.total_weight();
    if (g.edge_units() < 2) {
        d.factor_form = false;
        if (g.edge_units() == 0) {
            d.raw = ell_infinity(g);
            d.fdim_value = fdim(d.raw->normalized());
        } else {
            for (std::size_t v = 0; v < g.vertex_count(); ++v)
                for (std::size_t w = v + 1; w < g.vertex_count(); ++w)
                    if (g.mult[v][w] > 0) d.raw = edge_algebra(g, v, w).algebra;
            d.fdim_value = fdim(d.raw->normalized());
        }
        return d;
    }
    d.fdim_value = fdim_closed_form(g);
    d.atoms = boundary_set(g);
    Scalar atom_total(0);
    for (const auto& [v, a] : d.atoms) atom_total += a;
    Scalar wf = d.scale - atom_total;
    Scalar t = solve_parameter(d.fdim_value, atom_square_sum_normalized(d.atoms, d.scale),
                               wf / d.scale);
    d.factor = Decomposition::Factor{t, wf};
    return d;
}

BuildOrder default_build_order(const WeightedGraph& g) {
    BuildOrder order;
    if (g.vertex_count() == 0) return order;
    std::size_t root = 0;
    for (std::size_t v = 1; v < g.vertex_count(); ++v)
        if (g.weights[v].compare_exact(g.weights[root]) > 0) root = v;
    std::deque<std::size_t> queue{root};
    std::vector<bool> discovered(g.vertex_count(), false), processed(g.vertex_count(), false);
    discovered[root] = true;
    while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop_front();
        processed[u] = true;
        for (std::size_t p = 0; p < g.vertex_count(); ++p)
            if (processed[p] && p != u)
                for (unsigned k = 0; k < g.mult[u][p]; ++k) order.units.emplace_back(p, u);
        for (std::size_t w = 0; w < g.vertex_count(); ++w)
            if (g.mult[u][w] > 0 && !discovered[w]) {
                discovered[w] = true;
                queue.push_back(w);
            }
    }
    return order;
}

namespace {

// Two-edge base case analysis: returns the atoms of the base subgraph,
// with original-graph vertex indices.
std::vector<std::pair<std::size_t, Scalar>> base_case_atoms(
    const WeightedGraph& g, std::pair<std::size_t, std::size_t> u0,
    std::pair<std::size_t, std::size_t> u1) {
    std::vector<std::pair<std::size_t, Scalar>> atoms;
    auto push_if_positive = [&](std::size_t v, const Scalar& a) {
        if (a.is_positive()) atoms.emplace_back(v, a);
    };
    bool same_pair = (u0 == u1) || (u0.first == u1.second && u0.second == u1.first);
    if (same_pair) {
        // Double edge: atom gamma_v - 2 gamma_w at the heavy vertex.
        std::size_t v = u0.first, w = u0.second;
        if (g.weights[w].compare_exact(g.weights[v]) > 0) std::swap(v, w);
        push_if_positive(v, g.weights[v] - Scalar(2) * g.weights[w]);
        return atoms;
    }
    // Path x - c - z with shared center c.
    std::size_t c, x, z;
    if (u0.first == u1.first) { c = u0.first; x = u0.second; z = u1.second; }
    else if (u0.first == u1.second) { c = u0.first; x = u0.second; z = u1.first; }
    else if (u0.second == u1.first) { c = u0.second; x = u0.first; z = u1.second; }
    else { c = u0.second; x = u0.first; z = u1.first; }
    const Scalar& gc = g.weights[c];
    const Scalar& gx = g.weights[x];
    const Scalar& gz = g.weights[z];
    if (gc.compare_exact(gx) >= 0 && gc.compare_exact(gz) >= 0) {
        // Center heaviest: at most a central atom gamma_c - gamma_x - gamma_z.
        push_if_positive(c, gc - gx - gz);
    } else {
        // An endpoint is heaviest: endpoint atoms against the center weight.
        push_if_positive(x, gx - gc);
        push_if_positive(z, gz - gc);
    }
    return atoms;
}

void validate_order(const WeightedGraph& g, const BuildOrder& order) {
    std::map<std::pair<std::size_t, std::size_t>, unsigned> counts;
    for (auto [a, b] : order.units) {
        if (a >= g.vertex_count() || b >= g.vertex_count() || a == b)
            throw InvariantError("build order contains an invalid edge unit");
        counts[std::minmax(a, b)]++;
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        for (std::size_t w = v + 1; w < g.vertex_count(); ++w)
            if (counts[{v, w}] != g.mult[v][w])
                throw InvariantError("build order does not enumerate the graph's edge units");
    if (order.units.size() >= 2) {
        auto [a, b] = order.units[0];
        auto [c, d] = order.units[1];
        if (a != c && a != d && b != c && b != d)
            throw InvariantError("build order must start with a connected two-edge base");
    }
}

}  // namespace

IncrementalResult decompose_incremental(const WeightedGraph& g) {
    return decompose_incremental(g, default_build_order(g));
}

IncrementalResult decompose_incremental(const WeightedGraph& g, const BuildOrder& order) {
    require_valid(g);
    validate_order(g, order);
    IncrementalResult res;
    if (order.units.size() < 2) {
        res.final = decompose_direct(g);  // degenerate, same not-a-factor path
        return res;
    }

    // Growing prefix subgraph, indexed on its own; orig_of maps back.
    WeightedGraph cur;
    std::vector<std::size_t> orig_of;
    std::vector<int> sub_of(g.vertex_count(), -1);
    auto touch = [&](std::size_t orig) -> std::size_t {
        if (sub_of[orig] >= 0) return static_cast<std::size_t>(sub_of[orig]);
        std::size_t idx = cur.add_vertex(g.ids[orig], g.weights[orig]);
        orig_of.push_back(orig);
        sub_of[orig] = static_cast<int>(idx);
        return idx;
    };

    auto [b0a, b0b] = order.units[0];
    auto [b1a, b1b] = order.units[1];
    if (sub_of[b1a] < 0 && sub_of[b1b] < 0 && b1a != b0a && b1a != b0b && b1b != b0a &&
        b1b != b0b)
        throw InvariantError("second build unit is disconnected from the first");
    std::size_t s0a = touch(b0a), s0b = touch(b0b);
    cur.add_edge(s0a, s0b);
    std::size_t s1a = touch(b1a), s1b = touch(b1b);
    cur.add_edge(s1a, s1b);

    res.start_vertex =
        g.weights[b0a].compare_exact(g.weights[b0b]) >= 0 ? b0a : b0b;

    std::map<std::size_t, Scalar> atoms;  // orig vertex -> atom weight
    for (auto& [v, a] : base_case_atoms(g, order.units[0], order.units[1])) atoms[v] = a;

    // Free dimension of the base from free-product additivity over its two
    // edge algebras.
    VNAlgebra a0 = edge_algebra(cur, static_cast<std::size_t>(sub_of[b0a]),
                                static_cast<std::size_t>(sub_of[b0b]))
                       .algebra;
    VNAlgebra a1 = edge_algebra(cur, static_cast<std::size_t>(sub_of[b1a]),
                                static_cast<std::size_t>(sub_of[b1b]))
                       .algebra;
    Scalar fdim_cur =
        fdim_free_product(a0.normalized(), a1.normalized(), ell_infinity(cur).normalized());

    auto snapshot = [&]() {
        Decomposition d;
        d.scale = cur.total_weight();
        d.fdim_value = fdim_cur;
        Scalar atom_total(0);
        for (const auto& [v, a] : atoms) {
            d.atoms.emplace_back(v, a);
            atom_total += a;
        }
        Scalar wf = d.scale - atom_total;
        Scalar t = solve_parameter(fdim_cur, atom_square_sum_normalized(d.atoms, d.scale),
                                   wf / d.scale);
        d.factor = Decomposition::Factor{t, wf};
        return d;
    };

    res.chain.push_back(snapshot());

    for (std::size_t i = 2; i < order.units.size(); ++i) {
        auto [oa, ob] = order.units[i];
        bool a_new = sub_of[oa] < 0, b_new = sub_of[ob] < 0;
        if (a_new && b_new)
            throw InvariantError("build unit " + std::to_string(i) +
                                 " would disconnect the prefix subgraph");
        VNAlgebra current = res.chain.back().to_algebra();
        if (a_new || b_new) {
            // Pendant vertex step: adjoin C_{gamma_v} before freeing with A_e.
            std::size_t fresh = a_new ? oa : ob;
            touch(fresh);
            current = direct_sum({{current, current.total_weight()},
                                  {VNAlgebra({Summand::atom(g.weights[fresh])}),
                                   g.weights[fresh]}});
        }
        std::size_t sa = static_cast<std::size_t>(sub_of[oa]);
        std::size_t sb = static_cast<std::size_t>(sub_of[ob]);
        cur.add_edge(sa, sb);
        VNAlgebra ae = edge_algebra(cur, sa, sb).algebra;
        fdim_cur = fdim_free_product(current.normalized(), ae.normalized(),
                                     ell_infinity(cur).normalized());
        // Only the two endpoints can gain or lose an atom.
        for (std::size_t endpoint : {oa, ob}) {
            Scalar excess =
                g.weights[endpoint] - alpha(cur, static_cast<std::size_t>(sub_of[endpoint]));
            if (excess.is_positive())
                atoms[endpoint] = excess;
            else
                atoms.erase(endpoint);
        }
        res.chain.push_back(snapshot());
    }

    res.final = res.chain.back();
    return res;
}

std::vector<Scalar> embedding_parameter_chain(const std::vector<Decomposition>& chain,
                                              const WeightedGraph& g, std::size_t base_vertex) {
    std::vector<Scalar> params;
    // The compressing projection is fixed once: the base vertex's factor
    // part in the first chain algebra.  It stays inside every later factor,
    // so the same trace applies at each step.
    Scalar base_trace(0);
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const Decomposition& d = chain[i];
        if (!d.factor_form || !d.factor)
            throw InvariantError("chain entry " + std::to_string(i) + " is not in factor form");
        if (i == 0) {
            base_trace = g.weights[base_vertex];
            for (const auto& [v, a] : d.atoms)
                if (v == base_vertex) base_trace -= a;
            if (!base_trace.is_positive())
                throw InvariantError("base projection vanishes inside the first factor");
        }
        Scalar s = amplify_parameter(d.factor->t, base_trace / d.factor->weight);
        if (!params.empty() && !s.gt(params.back()))
            throw InvariantError("embedding parameters fail strict monotonicity at step " +
                                 std::to_string(i) + ": " + params.back().str() + " -> " +
                                 s.str());
        params.push_back(s);
    }
    return params;
}

}  // namespace graphvn
