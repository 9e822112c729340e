#include "graphvn/vn_algebra.hpp"

#include <algorithm>

namespace graphvn {

Summand Summand::factor(Scalar t, Scalar weight, std::string label) {
    if (t.is_finite() && !t.gt(Scalar(1)))
        throw InvariantError("free group factor parameter must satisfy t > 1, got " + t.str());
    return Summand{SummandKind::FreeGroupFactor, std::move(weight), std::move(t), 1,
                   std::move(label)};
}

Summand Summand::diffuse(Scalar weight, std::string label) {
    return Summand{SummandKind::DiffuseHyperfinite, std::move(weight), Scalar(0), 1,
                   std::move(label)};
}

Summand Summand::matrix(unsigned n, Scalar weight, std::string label) {
    if (n == 0) throw InvariantError("matrix summand needs positive size");
    return Summand{SummandKind::MatrixAlgebra, std::move(weight), Scalar(0), n, std::move(label)};
}

VNAlgebra::VNAlgebra(std::vector<Summand> summands) : summands_(std::move(summands)) {
    for (const auto& s : summands_) {
        if (!s.weight.is_positive())
            throw InvariantError("summand weight must be positive, got " + s.weight.str());
    }
    std::stable_sort(summands_.begin(), summands_.end(), [](const Summand& a, const Summand& b) {
        auto rank = [](const Summand& s) {
            switch (s.kind) {
                case SummandKind::FreeGroupFactor: return 0;
                case SummandKind::DiffuseHyperfinite: return 1;
                default: return 2;
            }
        };
        if (rank(a) != rank(b)) return rank(a) < rank(b);
        if (a.kind == SummandKind::FreeGroupFactor)
            return a.weight.compare_exact(b.weight) > 0;
        if (a.kind == SummandKind::MatrixAlgebra) return a.label < b.label;
        return false;
    });
}

Scalar VNAlgebra::total_weight() const {
    Scalar t(0);
    for (const auto& s : summands_) t += s.weight;
    return t;
}

bool VNAlgebra::is_single_factor() const {
    return summands_.size() == 1 && summands_[0].kind == SummandKind::FreeGroupFactor;
}

VNAlgebra VNAlgebra::scaled(const Scalar& c) const {
    if (!c.is_positive()) throw InvariantError("scale factor must be positive");
    std::vector<Summand> out = summands_;
    for (auto& s : out) s.weight *= c;
    return VNAlgebra(std::move(out));
}

bool VNAlgebra::structurally_equal(const VNAlgebra& other) const {
    if (summands_.size() != other.summands_.size()) return false;
    for (std::size_t i = 0; i < summands_.size(); ++i) {
        const auto& a = summands_[i];
        const auto& b = other.summands_[i];
        if (a.kind != b.kind || a.matrix_size != b.matrix_size) return false;
        if (!a.weight.eq(b.weight)) return false;
        if (a.kind == SummandKind::FreeGroupFactor && !a.parameter.eq(b.parameter)) return false;
    }
    return true;
}

Scalar fdim(const VNAlgebra& m) {
    if (!m.is_normalized())
        throw InvariantError("fdim requires a normalized algebra (total weight " +
                             m.total_weight().str() + "); normalize first");
    Scalar acc(1);
    for (const auto& s : m.summands()) {
        switch (s.kind) {
            case SummandKind::FreeGroupFactor:
                if (s.parameter.is_infinite()) return Scalar::infinity();
                acc += s.weight.squared() * (s.parameter - Scalar(1));
                break;
            case SummandKind::MatrixAlgebra: {
                Scalar alpha = s.weight / Scalar(static_cast<long>(s.matrix_size));
                acc -= alpha.squared();
                break;
            }
            case SummandKind::DiffuseHyperfinite:
                break;
        }
    }
    return acc;
}

Scalar fdim_free_product(const VNAlgebra& m1, const VNAlgebra& m2, const VNAlgebra& d) {
    for (const auto& s : d.summands()) {
        if (s.kind != SummandKind::MatrixAlgebra || s.matrix_size != 1)
            throw InvariantError("amalgam D must be finite-dimensional abelian");
    }
    return fdim(m1) + fdim(m2) - fdim(d);
}

Scalar amplify_parameter(const Scalar& t, const Scalar& gamma) {
    if (!gamma.is_positive()) throw InvariantError("amplification parameter must be positive");
    if (t.is_infinite()) return Scalar::infinity();
    return Scalar(1) + (t - Scalar(1)) / gamma.squared();
}

VNAlgebra amplify(const VNAlgebra& m, const Scalar& gamma) {
    if (!m.is_single_factor())
        throw InvariantError("amplify expects a single free group factor summand");
    const Summand& s = m.summands()[0];
    return VNAlgebra({Summand::factor(amplify_parameter(s.parameter, gamma), s.weight * gamma,
                                      s.label)});
}

VNAlgebra compress(const VNAlgebra& m, const ProjectionSpec& p) {
    std::vector<Summand> out;
    for (const auto& [idx, sub] : p) {
        if (idx >= m.summands().size())
            throw InvariantError("projection references summand " + std::to_string(idx) +
                                 " out of range");
        const Summand& s = m.summands()[idx];
        if (!sub.is_positive() || sub.gt(s.weight))
            throw InvariantError("sub-trace " + sub.str() + " invalid for summand of weight " +
                                 s.weight.str());
        switch (s.kind) {
            case SummandKind::FreeGroupFactor: {
                Scalar rel = sub / s.weight;
                out.push_back(Summand::factor(amplify_parameter(s.parameter, rel), sub, s.label));
                break;
            }
            case SummandKind::DiffuseHyperfinite:
                out.push_back(Summand::diffuse(sub, s.label));
                break;
            case SummandKind::MatrixAlgebra: {
                // sub must be k * weight / n for an integer 1 <= k <= n.
                Scalar ratio = sub * Scalar(static_cast<long>(s.matrix_size)) / s.weight;
                long k = -1;
                for (long c = 1; c <= static_cast<long>(s.matrix_size); ++c)
                    if (ratio.eq(Scalar(c))) { k = c; break; }
                if (k < 0)
                    throw InvariantError(
                        "matrix summand sub-trace must be an integer multiple of weight/n");
                out.push_back(Summand::matrix(static_cast<unsigned>(k), sub, s.label));
                break;
            }
        }
    }
    return VNAlgebra(std::move(out));
}

VNAlgebra direct_sum(const std::vector<std::pair<VNAlgebra, Scalar>>& parts) {
    std::vector<Summand> out;
    for (const auto& [alg, weight] : parts) {
        if (!weight.is_positive())
            throw InvariantError("direct sum block weight must be positive");
        VNAlgebra block = alg.scaled(weight / alg.total_weight());
        for (const auto& s : block.summands()) out.push_back(s);
    }
    return VNAlgebra(std::move(out));
}

}  // namespace graphvn
