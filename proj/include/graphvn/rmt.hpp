#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphvn/errors.hpp"

namespace graphvn {

// Rectangular Gaussian block model for one edge: the off-diagonal
// self-adjoint matrix whose square has Marchenko-Pastur bulk plus an atom
// at 0 of mass (mu_v - mu_w)/(mu_v + mu_w) when the block is unbalanced.
struct EdgeModel {
    double mu_v;  // heavier endpoint, mu_v >= mu_w > 0
    double mu_w;
    int n_scale;  // rows = round(n_scale * mu_w), cols = round(n_scale * mu_v)
    int trials;
    std::uint64_t seed;

    int rows() const;
    int cols() const;
    void validate() const;  // rounded dimensions >= 8, trials >= 1
};

struct EdgeReport {
    double atom_formula;
    double atom_estimate;  // mean over trials of the small-eigenvalue fraction
    double ci_low;         // normal-approximation 95% interval over trials
    double ci_high;
    double moments[4];     // empirical moments of the nonzero spectrum
    double min_eigenvalue;  // most negative pivot seen, sanity floor
    int rows;
    int cols;
    int trials;
    std::uint64_t seed;
    std::string generator;  // RNG algorithm name, fixed per build
    std::vector<double> per_trial;  // per-trial atom fractions, reduction order
};

// Monte Carlo estimate of the atom mass and bulk moments of the squared
// edge element.  Deterministic: each trial draws from its own stream
// derived from (seed, trial index) and the reduction order is fixed.
EdgeReport simulate_edge(const EdgeModel& m);

struct SemicircleReport {
    double m2, m4, m6;              // variance-normalized empirical moments
    double dev2, dev4, dev6;        // deviations from 1, 2, 5
    int n;
    int trials;
    std::uint64_t seed;
    std::string generator;
};

// Even moments of a self-adjoint Gaussian matrix vs the Catalan values.
SemicircleReport simulate_semicircular(int n, int trials, std::uint64_t seed);

// Name of the seedable generator used throughout (engine + transform).
const std::string& rng_name();

}  // namespace graphvn
