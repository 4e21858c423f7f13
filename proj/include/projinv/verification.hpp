#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

#include "projinv/jet_config.hpp"
#include "projinv/sampling.hpp"

namespace projinv {

using VectorFunction = std::function<std::vector<double>(const JetConfiguration&)>;

/// Central-difference Jacobian of f with respect to the 4n flattened
/// configuration coordinates. Each coordinate is stepped by
/// step * max(1, |coord|); the divisor is the exact floating-point spread
/// between the two evaluation abscissae.
Eigen::MatrixXd fd_jacobian(const VectorFunction& f, const JetConfiguration& cfg, double step = 1e-6);

struct RankReport {
    int n = 0;
    int rows = 0;
    int cols = 0;
    std::vector<double> singular_values;  // descending
    int rank = 0;
    double sigma_ratio = 0.0;  // sigma_{4n-8} / sigma_1
    bool passes = false;
};

/// Numerical functional-independence check of the generating set: SVD rank of
/// its finite-difference Jacobian at sampled general-position configurations,
/// thresholded at sigma_max * sv_threshold. The best of `trials` attempts is
/// reported; near-singular samples are resampled, not counted.
RankReport independence_rank(int n, int trials, std::uint64_t seed, double step = 1e-6,
                             double sv_threshold = 1e-6);

struct TrialReport {
    int trials = 0;
    int failures = 0;
    double max_rel_residual = 0.0;
    std::uint64_t seed = 0;
    double spread = 0.0;
};

/// Worst relative deviation |f(g.cfg) - f(cfg)| / (|f(cfg)| + eps) over
/// sampled (configuration, homography) pairs.
TrialReport invariance_trials(const VectorFunction& f, int trials, std::uint64_t seed,
                              double spread, int n);

}  // namespace projinv
