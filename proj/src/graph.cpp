#include "graphvn/graph.hpp"

#include <sstream>

namespace graphvn {

unsigned WeightedGraph::edge_units() const {
    unsigned total = 0;
    for (std::size_t v = 0; v < vertex_count(); ++v)
        for (std::size_t w = v + 1; w < vertex_count(); ++w) total += mult[v][w];
    return total;
}

Scalar WeightedGraph::total_weight() const {
    Scalar t(0);
    for (const auto& w : weights) t += w;
    return t;
}

int WeightedGraph::index_of(std::string_view id) const {
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (ids[i] == id) return static_cast<int>(i);
    return -1;
}

std::size_t WeightedGraph::add_vertex(std::string id, Scalar weight) {
    ids.push_back(std::move(id));
    weights.push_back(std::move(weight));
    for (auto& row : mult) row.push_back(0);
    mult.emplace_back(ids.size(), 0u);
    return ids.size() - 1;
}

void WeightedGraph::add_edge(std::size_t a, std::size_t b, unsigned multiplicity) {
    if (a >= vertex_count() || b >= vertex_count())
        throw InvariantError("edge endpoint out of range");
    if (a == b) throw InvariantError("self-loops are not allowed");
    mult[a][b] += multiplicity;
    mult[b][a] += multiplicity;
}

bool WeightedGraph::connected() const {
    if (vertex_count() == 0) return false;
    std::vector<bool> seen(vertex_count(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < vertex_count(); ++w) {
            if (mult[v][w] > 0 && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    for (bool b : seen)
        if (!b) return false;
    return true;
}

Scalar alpha(const WeightedGraph& g, std::size_t v) {
    if (v >= g.vertex_count()) throw InvariantError("unknown vertex index");
    Scalar a(0);
    for (std::size_t w = 0; w < g.vertex_count(); ++w)
        if (g.mult[v][w] > 0) a += Scalar(static_cast<long>(g.mult[v][w])) * g.weights[w];
    return a;
}

std::vector<std::pair<std::size_t, Scalar>> boundary_set(const WeightedGraph& g) {
    std::vector<std::pair<std::size_t, Scalar>> out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        Scalar a = alpha(g, v);
        if (g.weights[v].gt(a)) out.emplace_back(v, g.weights[v] - a);
    }
    return out;
}

std::vector<std::string> validate(const WeightedGraph& g) {
    std::vector<std::string> violations;
    if (g.vertex_count() == 0) {
        violations.push_back("graph has no vertices");
        return violations;
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (!g.weights[v].is_positive())
            violations.push_back("vertex '" + g.ids[v] + "' has non-positive weight " +
                                 g.weights[v].str());
        if (g.mult[v][v] > 0)
            violations.push_back("vertex '" + g.ids[v] + "' carries a self-loop");
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        for (std::size_t w = 0; w < v; ++w)
            if (g.mult[v][w] != g.mult[w][v])
                violations.push_back("multiplicity matrix is not symmetric at (" + g.ids[v] +
                                     ", " + g.ids[w] + ")");
    if (!g.connected()) violations.push_back("graph is not connected");
    return violations;
}

void require_valid(const WeightedGraph& g) {
    auto v = validate(g);
    if (v.empty()) return;
    std::string msg = "invalid graph:";
    for (const auto& s : v) msg += " [" + s + "]";
    throw InvariantError(msg);
}

Scalar quantum_integer(long k, const Scalar& delta) {
    if (k < 0) throw InvariantError("quantum integer index must be nonnegative");
    Scalar prev(0), cur(1);
    if (k == 0) return prev;
    for (long i = 1; i < k; ++i) {
        Scalar next = delta * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

WeightedGraph parse_graph(std::string_view text, bool real_mode) {
    WeightedGraph g;
    std::optional<Scalar> delta;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "delta") {
            std::string val;
            if (!(ls >> val)) throw ParseError("delta needs a value", lineno);
            delta = Scalar::parse(val, real_mode);
        } else if (word == "vertex") {
            std::string id, wtext;
            if (!(ls >> id >> wtext)) throw ParseError("vertex needs <id> <weight>", lineno);
            if (g.index_of(id) >= 0) throw ParseError("duplicate vertex '" + id + "'", lineno);
            Scalar weight;
            if (wtext.rfind("qint(", 0) == 0 && wtext.back() == ')') {
                if (!delta)
                    throw ParseError("qint(k) weight requires a prior delta line", lineno);
                long k;
                try {
                    k = std::stol(wtext.substr(5, wtext.size() - 6));
                } catch (const std::exception&) {
                    throw ParseError("bad qint index in '" + wtext + "'", lineno);
                }
                weight = quantum_integer(k, *delta);
            } else {
                try {
                    weight = Scalar::parse(wtext, real_mode);
                } catch (const Error&) {
                    throw ParseError("bad weight '" + wtext + "'", lineno);
                }
            }
            g.add_vertex(id, weight);
        } else if (word == "edge") {
            std::string a, b;
            if (!(ls >> a >> b)) throw ParseError("edge needs two vertex ids", lineno);
            unsigned m = 1;
            std::string mtext;
            if (ls >> mtext) {
                try {
                    m = static_cast<unsigned>(std::stoul(mtext));
                } catch (const std::exception&) {
                    throw ParseError("bad multiplicity '" + mtext + "'", lineno);
                }
            }
            int ia = g.index_of(a), ib = g.index_of(b);
            if (ia < 0) throw ParseError("unknown vertex '" + a + "'", lineno);
            if (ib < 0) throw ParseError("unknown vertex '" + b + "'", lineno);
            if (ia == ib) throw ParseError("self-loop at '" + a + "'", lineno);
            g.add_edge(static_cast<std::size_t>(ia), static_cast<std::size_t>(ib), m);
        } else {
            throw ParseError("unknown directive '" + word + "'", lineno);
        }
    }
    return g;
}

std::string format_graph(const WeightedGraph& g) {
    std::ostringstream os;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        os << "vertex " << g.ids[v] << " " << g.weights[v].str() << "\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        for (std::size_t w = v + 1; w < g.vertex_count(); ++w)
            if (g.mult[v][w] > 0)
                os << "edge " << g.ids[v] << " " << g.ids[w] << " " << g.mult[v][w] << "\n";
    return os.str();
}

}  // namespace graphvn
