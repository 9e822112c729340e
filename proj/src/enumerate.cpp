#include "graphvn/enumerate.hpp"

#include <random>

namespace graphvn {

namespace {

struct Slot {
    std::size_t a, b;
};

void assign_mults(const std::vector<Slot>& slots, std::size_t i, unsigned budget,
                  std::vector<unsigned>& mults, unsigned placed,
                  const std::function<void(const std::vector<unsigned>&, unsigned)>& fn) {
    if (i == slots.size()) {
        fn(mults, placed);
        return;
    }
    for (unsigned m = 0; m <= budget; ++m) {
        mults[i] = m;
        assign_mults(slots, i + 1, budget - m, mults, placed + m, fn);
    }
    mults[i] = 0;
}

}  // namespace

std::size_t for_each_small_graph(unsigned max_vertices, unsigned max_units,
                                 const std::vector<Scalar>& weight_grid,
                                 const std::function<void(const WeightedGraph&)>& fn) {
    std::size_t visited = 0;
    for (unsigned n = 2; n <= max_vertices; ++n) {
        std::vector<Slot> slots;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) slots.push_back({a, b});
        std::vector<unsigned> mults(slots.size(), 0);

        // Weight tuples as a mixed-radix counter over the grid.
        std::vector<std::size_t> widx(n, 0);
        bool more_weights = true;
        while (more_weights) {
            assign_mults(slots, 0, max_units, mults, 0,
                         [&](const std::vector<unsigned>& ms, unsigned placed) {
                             if (placed == 0) return;
                             WeightedGraph g;
                             for (std::size_t v = 0; v < n; ++v)
                                 g.add_vertex("v" + std::to_string(v), weight_grid[widx[v]]);
                             for (std::size_t s = 0; s < slots.size(); ++s)
                                 if (ms[s] > 0) g.add_edge(slots[s].a, slots[s].b, ms[s]);
                             if (!g.connected()) return;
                             ++visited;
                             fn(g);
                         });
            more_weights = false;
            for (std::size_t v = 0; v < n; ++v) {
                if (++widx[v] < weight_grid.size()) {
                    more_weights = true;
                    break;
                }
                widx[v] = 0;
            }
        }
    }
    return visited;
}

WeightedGraph random_graph(std::uint64_t seed, unsigned max_vertices, unsigned max_units) {
    std::mt19937_64 eng(seed);
    auto pick = [&](unsigned lo, unsigned hi) {
        return lo + static_cast<unsigned>(eng() % (hi - lo + 1));
    };
    unsigned n = pick(2, max_vertices);
    WeightedGraph g;
    for (unsigned v = 0; v < n; ++v)
        g.add_vertex("v" + std::to_string(v),
                     Scalar::rational(static_cast<long>(pick(1, 9)),
                                      static_cast<long>(pick(1, 9))));
    // Random spanning tree keeps the graph connected.
    for (unsigned v = 1; v < n; ++v) g.add_edge(pick(0, v - 1), v);
    unsigned extra = pick(0, max_units > n - 1 ? max_units - (n - 1) : 0);
    for (unsigned i = 0; i < extra; ++i) {
        unsigned a = pick(0, n - 1), b = pick(0, n - 1);
        if (a != b) g.add_edge(a, b);
    }
    return g;
}

}  // namespace graphvn
