#pragma once

#include <map>
#include <vector>

#include "graphvn/scalar.hpp"

namespace graphvn {

// A noncrossing perfect pairing of 2n boundary points, stored as a matching
// array m with m[m[i]] = i.
class TLDiagram {
public:
    TLDiagram() = default;  // empty diagram, the unit
    explicit TLDiagram(std::vector<int> match);

    static TLDiagram cup() { return TLDiagram({1, 0}); }
    // (0,1)(2,3)...: n side-by-side cups.
    static TLDiagram cups(int n);

    int points() const { return static_cast<int>(match_.size()); }
    int partner(int i) const { return match_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& matching() const { return match_; }

    TLDiagram juxtapose(const TLDiagram& right) const;
    TLDiagram reflected() const;  // left-right flip, i -> 2n-1-i

    auto operator<=>(const TLDiagram&) const = default;

private:
    std::vector<int> match_;
};

// All noncrossing pairings of n_points points (n_points even), generated
// recursively by pairing the first free point.
std::vector<std::vector<int>> noncrossing_pairings(int n_points);
// Same set via Dyck-word enumeration; independent generator used by the
// second trace algorithm.
std::vector<std::vector<int>> noncrossing_pairings_dyck(int n_points);

// Loop count of the closed diagram formed by stacking closure c on d:
// cycle traversal of the union of the two matchings.
int loop_count_traversal(const std::vector<int>& d, const std::vector<int>& c);
// Same count by union-find on the strands.
int loop_count_union_find(const std::vector<int>& d, const std::vector<int>& c);

// A formal linear combination of diagrams with a loop parameter delta.
class GrElement {
public:
    explicit GrElement(Scalar delta);
    static GrElement unit(Scalar delta);
    static GrElement single(const TLDiagram& d, Scalar delta, Scalar coeff = Scalar(1));

    const Scalar& delta() const { return delta_; }
    const std::map<TLDiagram, Scalar>& terms() const { return terms_; }
    int max_points() const;

    void add_term(const TLDiagram& d, const Scalar& coeff);  // drops zeros
    GrElement multiply(const GrElement& other) const;
    GrElement operator+(const GrElement& other) const;
    GrElement scaled(const Scalar& c) const;
    GrElement pow(int e) const;

    bool self_adjoint() const;

    // Trace by closure enumeration: sum over diagrams and noncrossing
    // closures of delta^{loops}.  The empty diagram has trace 1.
    Scalar trace() const;
    // Trace as a polynomial in delta: loop count -> summed coefficient.
    std::map<int, Scalar> trace_poly() const;

private:
    Scalar delta_;
    std::map<TLDiagram, Scalar> terms_;
};

// Moments [trace(g^j) for j = 0..n_max], computed by two independent
// algorithms (recursive closure enumeration + cycle traversal, and Dyck
// enumeration + union-find) which must agree exactly.
std::vector<Scalar> moments(const GrElement& g, int n_max);
// Symbolic version, one delta-polynomial per moment.
std::vector<std::map<int, Scalar>> moments_poly(const GrElement& g, int n_max);

// Positive semidefiniteness of the Hankel moment matrix [m_{i+j}], i,j <=
// size, checked by exact LDL elimination (tolerance-aware in real mode).
bool positivity_check(const GrElement& g, int size);

}  // namespace graphvn
