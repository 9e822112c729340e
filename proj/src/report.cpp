#include "graphvn/report.hpp"

namespace graphvn {

Json scalar_json(const Scalar& s) { return s.str(); }

Json graph_json(const WeightedGraph& g) {
    Json verts = Json::array();
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        verts.push_back({{"id", g.ids[v]}, {"weight", scalar_json(g.weights[v])}});
    Json edges = Json::array();
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        for (std::size_t w = v + 1; w < g.vertex_count(); ++w)
            if (g.mult[v][w] > 0)
                edges.push_back(
                    {{"a", g.ids[v]}, {"b", g.ids[w]}, {"multiplicity", g.mult[v][w]}});
    return Json{{"vertices", verts}, {"edges", edges}};
}

Json algebra_json(const VNAlgebra& a) {
    Json out = Json::array();
    for (const auto& s : a.summands()) {
        Json j;
        switch (s.kind) {
            case SummandKind::FreeGroupFactor:
                j["kind"] = "free_group_factor";
                j["parameter"] = scalar_json(s.parameter);
                break;
            case SummandKind::DiffuseHyperfinite:
                j["kind"] = "diffuse";
                break;
            case SummandKind::MatrixAlgebra:
                j["kind"] = "matrix";
                j["size"] = s.matrix_size;
                break;
        }
        j["weight"] = scalar_json(s.weight);
        if (!s.label.empty()) j["label"] = s.label;
        out.push_back(std::move(j));
    }
    return out;
}

namespace {

Json decomposition_json(const WeightedGraph& g, const Decomposition& d) {
    Json j;
    j["factor_form"] = d.factor_form;
    if (d.factor) {
        j["t"] = scalar_json(d.factor->t);
        j["factor_weight"] = scalar_json(d.factor->weight);
    }
    Json atoms = Json::array();
    for (const auto& [v, mass] : d.atoms)
        atoms.push_back({{"vertex", g.ids[v]}, {"mass", scalar_json(mass)}});
    j["atoms"] = atoms;
    j["fdim"] = scalar_json(d.fdim_value);
    j["scale"] = scalar_json(d.scale);
    if (d.raw) j["raw"] = algebra_json(*d.raw);
    return j;
}

}  // namespace

Json decompose_report(const WeightedGraph& g, const Decomposition& direct,
                      const IncrementalResult* incremental) {
    Json j;
    j["report"] = "decompose";
    j["graph"] = graph_json(g);
    j["direct"] = decomposition_json(g, direct);
    if (incremental) {
        j["incremental"] = decomposition_json(g, incremental->final);
        j["route_agreement"] = direct.agrees_with(incremental->final);
        if (incremental->final.factor_form && incremental->final.factor) {
            Json chain = Json::array();
            for (const auto& t : embedding_parameter_chain(incremental->chain, g,
                                                           incremental->start_vertex))
                chain.push_back(scalar_json(t));
            j["chain_parameters"] = chain;
            j["chain_base_vertex"] = g.ids[incremental->start_vertex];
        }
    }
    return j;
}

Json truncation_report(const std::string& name, const Scalar& delta,
                       const std::vector<TruncationRow>& rows) {
    Json j;
    j["report"] = "truncation-sequence";
    j["graph"] = name;
    j["delta"] = scalar_json(delta);
    Json table = Json::array();
    for (const auto& r : rows) {
        Json row;
        row["k"] = r.k;
        row["fdim"] = scalar_json(r.fdim);
        row["t"] = scalar_json(r.t);
        Json atoms = Json::array();
        for (const auto& [id, mass] : r.atoms)
            atoms.push_back({{"vertex", id}, {"mass", scalar_json(mass)}});
        row["atoms"] = atoms;
        row["t_prime"] = scalar_json(r.t_prime);
        table.push_back(std::move(row));
    }
    j["rows"] = table;
    return j;
}

Json gjs_report(const std::string& name, const Scalar& delta, const GjsCheck& check) {
    Json j;
    j["report"] = "gjs-check";
    j["graph"] = name;
    j["delta"] = scalar_json(delta);
    j["applicable"] = check.applicable;
    if (!check.applicable) {
        j["reason"] = check.reason;
        return j;
    }
    j["engine_t"] = scalar_json(check.engine_t);
    j["global_index"] = scalar_json(check.global_index);
    j["formula_t"] = scalar_json(check.formula_t);
    j["difference"] = scalar_json(check.difference);
    j["agrees"] = check.agrees;
    return j;
}

Json tl_report(const GrElement& g, int n_max, int hankel_size, bool symbolic) {
    Json j;
    j["report"] = "tl-moments";
    j["delta"] = symbolic ? Json("symbolic") : scalar_json(g.delta());
    auto polys = moments_poly(g, n_max);
    Json rows = Json::array();
    for (int n = 0; n <= n_max; ++n) {
        Json row;
        row["n"] = n;
        Json poly = Json::array();
        for (const auto& [loops, coeff] : polys[static_cast<std::size_t>(n)])
            poly.push_back({{"loops", loops}, {"coeff", scalar_json(coeff)}});
        row["polynomial"] = poly;
        if (!symbolic) {
            Scalar val(0);
            for (const auto& [loops, coeff] : polys[static_cast<std::size_t>(n)])
                val += coeff * g.delta().pow_int(loops);
            row["value"] = scalar_json(val);
        }
        rows.push_back(std::move(row));
    }
    j["moments"] = rows;
    if (!symbolic && hankel_size >= 0) {
        j["hankel_size"] = hankel_size;
        j["hankel_psd"] = positivity_check(g, hankel_size);
    }
    return j;
}

Json edge_report_json(const EdgeReport& r) {
    Json j;
    j["report"] = "simulate-edge";
    j["atom_formula"] = r.atom_formula;
    j["atom_estimate"] = r.atom_estimate;
    j["ci_low"] = r.ci_low;
    j["ci_high"] = r.ci_high;
    j["moments"] = Json::array({r.moments[0], r.moments[1], r.moments[2], r.moments[3]});
    j["min_eigenvalue"] = r.min_eigenvalue;
    j["rows"] = r.rows;
    j["cols"] = r.cols;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["generator"] = r.generator;
    j["per_trial"] = r.per_trial;
    return j;
}

Json semicircle_report_json(const SemicircleReport& r) {
    Json j;
    j["report"] = "simulate-semicircular";
    j["m2"] = r.m2;
    j["m4"] = r.m4;
    j["m6"] = r.m6;
    j["dev2"] = r.dev2;
    j["dev4"] = r.dev4;
    j["dev6"] = r.dev6;
    j["n"] = r.n;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["generator"] = r.generator;
    return j;
}

}  // namespace graphvn
