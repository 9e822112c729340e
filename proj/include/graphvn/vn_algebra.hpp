#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphvn/scalar.hpp"

namespace graphvn {

enum class SummandKind { FreeGroupFactor, DiffuseHyperfinite, MatrixAlgebra };

// One block of the normal form: a free group factor L(F_t), a diffuse
// hyperfinite algebra, or a matrix algebra M_n, carrying the trace of its
// identity.
struct Summand {
    SummandKind kind;
    Scalar weight;           // trace of the summand's identity, > 0
    Scalar parameter;        // t for factors; t > 1 or infinity
    unsigned matrix_size{1}; // n for matrix algebras
    std::string label;       // optional vertex / projection tag

    static Summand factor(Scalar t, Scalar weight, std::string label = {});
    static Summand diffuse(Scalar weight, std::string label = {});
    static Summand matrix(unsigned n, Scalar weight, std::string label = {});
    static Summand atom(Scalar weight, std::string label = {}) {
        return matrix(1, std::move(weight), std::move(label));
    }
};

// A finite direct sum of summands in canonical order: free group factors
// first (descending weight), then diffuse summands, then matrix summands
// sorted by label.
class VNAlgebra {
public:
    VNAlgebra() = default;
    explicit VNAlgebra(std::vector<Summand> summands);

    const std::vector<Summand>& summands() const { return summands_; }
    Scalar total_weight() const;
    bool is_single_factor() const;
    bool is_normalized() const { return total_weight().eq(Scalar(1)); }

    // Rescales every weight by c > 0.
    VNAlgebra scaled(const Scalar& c) const;
    VNAlgebra normalized() const { return scaled(Scalar(1) / total_weight()); }

    bool structurally_equal(const VNAlgebra& other) const;

private:
    std::vector<Summand> summands_;
};

// Per-summand sub-traces of a projection; keys index into summands().
using ProjectionSpec = std::map<std::size_t, Scalar>;

// Free dimension of a normalized algebra:
//   1 + sum_j gamma_j^2 (t_j - 1) - sum_k alpha_k^2,
// with alpha_k the trace of a minimal projection of the k-th matrix summand.
// An infinite factor parameter yields the infinite marker.
Scalar fdim(const VNAlgebra& m);

// Additivity over an amalgamated free product with finite-dimensional
// abelian D: fdim(M1) + fdim(M2) - fdim(D).  Pure bookkeeping.
Scalar fdim_free_product(const VNAlgebra& m1, const VNAlgebra& m2, const VNAlgebra& d);

// gamma-amplification of a single free group factor:
//   L(F_t)_gamma = L(F(1 + gamma^{-2}(t - 1))).
VNAlgebra amplify(const VNAlgebra& m, const Scalar& gamma);

// Amplification at the parameter level.
Scalar amplify_parameter(const Scalar& t, const Scalar& gamma);

// Corner pMp in normal form.  Factor summands amplify by subtrace/weight,
// matrix summands shrink, summands absent from p vanish.
VNAlgebra compress(const VNAlgebra& m, const ProjectionSpec& p);

VNAlgebra direct_sum(const std::vector<std::pair<VNAlgebra, Scalar>>& parts);

}  // namespace graphvn
