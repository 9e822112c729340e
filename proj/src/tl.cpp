#include "graphvn/tl.hpp"

#include <algorithm>
#include <numeric>

namespace graphvn {

namespace {

constexpr int kMaxClosurePoints = 24;  // C_12 closures; past this the Catalan growth is hopeless

void check_matching(const std::vector<int>& m) {
    int n = static_cast<int>(m.size());
    if (n % 2 != 0) throw InvariantError("diagram needs an even number of points");
    for (int i = 0; i < n; ++i) {
        if (m[i] < 0 || m[i] >= n || m[i] == i || m[m[i]] != i)
            throw InvariantError("matching array is not a fixed-point-free involution");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (j < m[i] && m[i] < m[j]) throw InvariantError("matching has a crossing");
}

}  // namespace

TLDiagram::TLDiagram(std::vector<int> match) : match_(std::move(match)) {
    check_matching(match_);
}

TLDiagram TLDiagram::cups(int n) {
    std::vector<int> m(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        m[2 * i] = 2 * i + 1;
        m[2 * i + 1] = 2 * i;
    }
    return TLDiagram(std::move(m));
}

TLDiagram TLDiagram::juxtapose(const TLDiagram& right) const {
    std::vector<int> m = match_;
    int off = points();
    for (int x : right.match_) m.push_back(x + off);
    return TLDiagram(std::move(m));
}

TLDiagram TLDiagram::reflected() const {
    int n = points();
    std::vector<int> m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) m[n - 1 - i] = n - 1 - match_[i];
    return TLDiagram(std::move(m));
}

namespace {

void pairings_rec(std::vector<int>& m, const std::vector<int>& free_points,
                  std::vector<std::vector<int>>& out) {
    if (free_points.empty()) {
        out.push_back(m);
        return;
    }
    int first = free_points[0];
    // Pair the first free point with any point leaving an even gap inside.
    for (std::size_t j = 1; j < free_points.size(); j += 2) {
        int mate = free_points[j];
        m[first] = mate;
        m[mate] = first;
        std::vector<int> inside(free_points.begin() + 1, free_points.begin() + j);
        std::vector<int> outside(free_points.begin() + j + 1, free_points.end());
        if (inside.empty()) {
            pairings_rec(m, outside, out);
        } else {
            // Noncrossing forces inside and outside to close separately.
            std::vector<std::vector<int>> inner;
            std::vector<int> probe = m;
            pairings_rec(probe, inside, inner);
            for (auto& full_inner : inner) {
                std::vector<int> m2 = full_inner;
                pairings_rec(m2, outside, out);
            }
        }
    }
}

}  // namespace

std::vector<std::vector<int>> noncrossing_pairings(int n_points) {
    if (n_points % 2 != 0) throw InvariantError("closures need an even point count");
    if (n_points > kMaxClosurePoints)
        throw NumericError("closure enumeration capped at " +
                           std::to_string(kMaxClosurePoints) + " points");
    std::vector<std::vector<int>> out;
    if (n_points == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> m(static_cast<std::size_t>(n_points), -1);
    std::vector<int> all(static_cast<std::size_t>(n_points));
    std::iota(all.begin(), all.end(), 0);
    pairings_rec(m, all, out);
    return out;
}

std::vector<std::vector<int>> noncrossing_pairings_dyck(int n_points) {
    if (n_points % 2 != 0) throw InvariantError("closures need an even point count");
    if (n_points > kMaxClosurePoints)
        throw NumericError("closure enumeration capped at " +
                           std::to_string(kMaxClosurePoints) + " points");
    std::vector<std::vector<int>> out;
    if (n_points == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> word(static_cast<std::size_t>(n_points));
    auto emit = [&]() {
        std::vector<int> m(static_cast<std::size_t>(n_points));
        std::vector<int> stack;
        for (int i = 0; i < n_points; ++i) {
            if (word[i] == 1) {
                stack.push_back(i);
            } else {
                int open = stack.back();
                stack.pop_back();
                m[open] = i;
                m[i] = open;
            }
        }
        out.push_back(std::move(m));
    };
    // Enumerate balanced words, opens = 1, closes = 0.
    auto rec = [&](auto&& self, int pos, int open, int close) -> void {
        if (pos == n_points) {
            emit();
            return;
        }
        if (open < n_points / 2) {
            word[pos] = 1;
            self(self, pos + 1, open + 1, close);
        }
        if (close < open) {
            word[pos] = 0;
            self(self, pos + 1, open, close + 1);
        }
    };
    rec(rec, 0, 0, 0);
    return out;
}

int loop_count_traversal(const std::vector<int>& d, const std::vector<int>& c) {
    int n = static_cast<int>(d.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    int loops = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++loops;
        int cur = i;
        // Alternate diagram and closure strands until the cycle closes.
        do {
            seen[cur] = true;
            int across = d[cur];
            seen[across] = true;
            cur = c[across];
        } while (cur != i);
    }
    return loops;
}

int loop_count_union_find(const std::vector<int>& d, const std::vector<int>& c) {
    int n = static_cast<int>(d.size());
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[a] = b;
    };
    for (int i = 0; i < n; ++i) {
        unite(i, d[i]);
        unite(i, c[i]);
    }
    int roots = 0;
    for (int i = 0; i < n; ++i)
        if (find(i) == i) ++roots;
    return roots;
}

GrElement::GrElement(Scalar delta) : delta_(std::move(delta)) {
    if (!delta_.gt(Scalar(1))) throw InvariantError("loop parameter delta must exceed 1");
}

GrElement GrElement::unit(Scalar delta) {
    GrElement g(std::move(delta));
    g.add_term(TLDiagram(), Scalar(1));
    return g;
}

GrElement GrElement::single(const TLDiagram& d, Scalar delta, Scalar coeff) {
    GrElement g(std::move(delta));
    g.add_term(d, coeff);
    return g;
}

int GrElement::max_points() const {
    int n = 0;
    for (const auto& [d, c] : terms_) n = std::max(n, d.points());
    return n;
}

void GrElement::add_term(const TLDiagram& d, const Scalar& coeff) {
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(d, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

GrElement GrElement::multiply(const GrElement& other) const {
    if (!delta_.eq(other.delta_))
        throw InvariantError("cannot multiply Gr-elements with different loop parameters");
    GrElement out(delta_);
    for (const auto& [da, ca] : terms_)
        for (const auto& [db, cb] : other.terms_) out.add_term(da.juxtapose(db), ca * cb);
    return out;
}

GrElement GrElement::operator+(const GrElement& other) const {
    if (!delta_.eq(other.delta_))
        throw InvariantError("cannot add Gr-elements with different loop parameters");
    GrElement out = *this;
    for (const auto& [d, c] : other.terms_) out.add_term(d, c);
    return out;
}

GrElement GrElement::scaled(const Scalar& c) const {
    GrElement out(delta_);
    for (const auto& [d, coeff] : terms_) out.add_term(d, coeff * c);
    return out;
}

GrElement GrElement::pow(int e) const {
    if (e < 0) throw InvariantError("negative powers are not defined under juxtaposition");
    GrElement acc = unit(delta_);
    for (int i = 0; i < e; ++i) acc = acc.multiply(*this);
    return acc;
}

bool GrElement::self_adjoint() const {
    for (const auto& [d, c] : terms_) {
        auto it = terms_.find(d.reflected());
        if (it == terms_.end() || !it->second.eq(c)) return false;
    }
    return true;
}

namespace {

std::map<int, Scalar> trace_poly_impl(const GrElement& g, bool dyck_route) {
    std::map<int, Scalar> poly;
    for (const auto& [d, coeff] : g.terms()) {
        auto closures = dyck_route ? noncrossing_pairings_dyck(d.points())
                                   : noncrossing_pairings(d.points());
        for (const auto& c : closures) {
            int loops = dyck_route ? loop_count_union_find(d.matching(), c)
                                   : loop_count_traversal(d.matching(), c);
            auto [it, inserted] = poly.try_emplace(loops, coeff);
            if (!inserted) it->second += coeff;
        }
    }
    for (auto it = poly.begin(); it != poly.end();)
        it = it->second.is_zero() ? poly.erase(it) : std::next(it);
    return poly;
}

Scalar eval_poly(const std::map<int, Scalar>& poly, const Scalar& delta) {
    Scalar acc(0);
    for (const auto& [loops, coeff] : poly) acc += coeff * delta.pow_int(loops);
    return acc;
}

}  // namespace

std::map<int, Scalar> GrElement::trace_poly() const { return trace_poly_impl(*this, false); }

Scalar GrElement::trace() const { return eval_poly(trace_poly(), delta_); }

std::vector<std::map<int, Scalar>> moments_poly(const GrElement& g, int n_max) {
    std::vector<std::map<int, Scalar>> out;
    GrElement acc = GrElement::unit(g.delta());
    for (int j = 0; j <= n_max; ++j) {
        auto a = trace_poly_impl(acc, false);
        auto b = trace_poly_impl(acc, true);
        if (a.size() != b.size() ||
            !std::equal(a.begin(), a.end(), b.begin(), [](const auto& x, const auto& y) {
                return x.first == y.first && x.second.eq(y.second);
            }))
            throw NumericError("moment algorithms disagree at order " + std::to_string(j));
        out.push_back(std::move(a));
        if (j < n_max) acc = acc.multiply(g);
    }
    return out;
}

std::vector<Scalar> moments(const GrElement& g, int n_max) {
    std::vector<Scalar> out;
    for (const auto& poly : moments_poly(g, n_max)) out.push_back(eval_poly(poly, g.delta()));
    return out;
}

bool positivity_check(const GrElement& g, int size) {
    if (size < 0 || size > 7) throw InvariantError("positivity check supports sizes 0..7");
    if (!g.self_adjoint())
        throw InvariantError("positivity check requires a self-adjoint element");
    std::vector<Scalar> m = moments(g, 2 * size);
    int n = size + 1;
    std::vector<std::vector<Scalar>> h(static_cast<std::size_t>(n),
                                       std::vector<Scalar>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h[i][j] = m[static_cast<std::size_t>(i + j)];
    // Symmetric elimination: PSD iff every pivot is >= 0 and zero pivots
    // head all-zero rows.
    for (int k = 0; k < n; ++k) {
        Scalar pivot = h[k][k];
        if (pivot.lt(Scalar(0))) return false;
        if (pivot.is_zero()) {
            for (int j = k + 1; j < n; ++j)
                if (!h[k][j].is_zero()) return false;
            continue;
        }
        for (int i = k + 1; i < n; ++i) {
            Scalar f = h[i][k] / pivot;
            for (int j = k; j < n; ++j) h[i][j] -= f * h[k][j];
        }
    }
    return true;
}

}  // namespace graphvn
