#include "graphvn/rmt.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

namespace graphvn {

namespace {

// Polar-method Gaussian stream on top of mt19937_64; named so the config
// can pin it and reruns stay byte-identical across platforms.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : eng_(seed) {}

    double next() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

private:
    double uniform() {
        // 53 random bits into [0,1).
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }
    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
    return splitmix64(seed ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(trial + 1)));
}

Eigen::MatrixXd gaussian_matrix(int rows, int cols, std::uint64_t seed) {
    GaussianStream g(seed);
    Eigen::MatrixXd m(rows, cols);
    // Fill order is part of the determinism contract.
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = g.next();
    return m;
}

}  // namespace

const std::string& rng_name() {
    static const std::string name = "mt19937_64-polar";
    return name;
}

int EdgeModel::rows() const { return static_cast<int>(std::lround(n_scale * mu_w)); }
int EdgeModel::cols() const { return static_cast<int>(std::lround(n_scale * mu_v)); }

void EdgeModel::validate() const {
    if (!(mu_w > 0) || !(mu_v >= mu_w))
        throw InvariantError("edge model needs mu_v >= mu_w > 0");
    if (rows() < 8 || cols() < 8)
        throw InvariantError("rounded matrix dimensions must be at least 8");
    if (trials < 1) throw InvariantError("at least one trial required");
}

EdgeReport simulate_edge(const EdgeModel& m) {
    m.validate();
    const int r = m.rows();
    const int c = m.cols();
    const int total = r + c;  // eigenvalue count of the squared edge element

    EdgeReport rep;
    rep.atom_formula = (m.mu_v - m.mu_w) / (m.mu_v + m.mu_w);
    rep.rows = r;
    rep.cols = c;
    rep.trials = m.trials;
    rep.seed = m.seed;
    rep.generator = rng_name();
    rep.min_eigenvalue = 0.0;
    double msum[4] = {0, 0, 0, 0};

    for (int t = 0; t < m.trials; ++t) {
        Eigen::MatrixXd g = gaussian_matrix(r, c, trial_seed(m.seed, t));
        // Gram matrix on the small side: its spectrum is the nonzero
        // spectrum of the squared edge element, each value twice, plus
        // c - r structural zeros.
        Eigen::MatrixXd a = (g * g.transpose()) / static_cast<double>(m.n_scale);

        double tr1 = a.trace();
        double mean_ev = 2.0 * tr1 / total;
        double cutoff = 1e-6 * mean_ev;

        // Eigenvalues below the cutoff, counted by Sylvester inertia of
        // the shifted matrix: negative pivots of A - cutoff I.
        Eigen::MatrixXd shifted = a;
        shifted.diagonal().array() -= cutoff;
        Eigen::LDLT<Eigen::MatrixXd> ldlt(shifted);
        int below = 0;
        for (int i = 0; i < r; ++i) {
            double d = ldlt.vectorD()(i);
            if (d < 0) {
                ++below;
                rep.min_eigenvalue = std::min(rep.min_eigenvalue, d + cutoff);
            }
        }
        double frac = static_cast<double>((c - r) + 2 * below) / total;
        rep.per_trial.push_back(frac);

        // Bulk moments from power traces; sub-cutoff eigenvalues add only
        // O(cutoff) and are ignored.
        Eigen::MatrixXd a2 = a * a;
        double tr2 = a.squaredNorm();
        double tr3 = (a.cwiseProduct(a2)).sum();
        double tr4 = a2.squaredNorm();
        double n_pos = static_cast<double>(r - below);
        if (n_pos > 0) {
            msum[0] += tr1 / n_pos;
            msum[1] += tr2 / n_pos;
            msum[2] += tr3 / n_pos;
            msum[3] += tr4 / n_pos;
        }
    }

    double mean = 0;
    for (double f : rep.per_trial) mean += f;
    mean /= m.trials;
    double var = 0;
    for (double f : rep.per_trial) var += (f - mean) * (f - mean);
    var = m.trials > 1 ? var / (m.trials - 1) : 0.0;
    double half = 1.959963984540054 * std::sqrt(var / m.trials);
    rep.atom_estimate = mean;
    rep.ci_low = mean - half;
    rep.ci_high = mean + half;
    for (int k = 0; k < 4; ++k) rep.moments[k] = msum[k] / m.trials;
    return rep;
}

SemicircleReport simulate_semicircular(int n, int trials, std::uint64_t seed) {
    if (n < 2) throw InvariantError("matrix size must be at least 2");
    if (trials < 1) throw InvariantError("at least one trial required");
    SemicircleReport rep;
    rep.n = n;
    rep.trials = trials;
    rep.seed = seed;
    rep.generator = rng_name();
    double s2 = 0, s4 = 0, s6 = 0;
    for (int t = 0; t < trials; ++t) {
        Eigen::MatrixXd g = gaussian_matrix(n, n, trial_seed(seed, t));
        // Off-diagonal entry variance 1/n gives the unit-radius-2 law.
        Eigen::MatrixXd h = (g + g.transpose()) / std::sqrt(2.0 * n);
        Eigen::MatrixXd h2 = h * h;
        Eigen::MatrixXd h3 = h2 * h;
        s2 += h.squaredNorm() / n;    // tr(h^2)/n
        s4 += h2.squaredNorm() / n;   // tr(h^4)/n
        s6 += h3.squaredNorm() / n;   // tr(h^6)/n
    }
    rep.m2 = s2 / trials;
    rep.m4 = s4 / trials;
    rep.m6 = s6 / trials;
    rep.dev2 = rep.m2 - 1.0;
    rep.dev4 = rep.m4 - 2.0;
    rep.dev6 = rep.m6 - 5.0;
    return rep;
}

}  // namespace graphvn
