#include "projinv/verification.hpp"

#include <algorithm>
#include <cmath>

#include "projinv/homography.hpp"
#include "projinv/invariants.hpp"
#include "projinv/parallel.hpp"

namespace projinv {

Eigen::MatrixXd fd_jacobian(const VectorFunction& f, const JetConfiguration& cfg, double step) {
    const std::vector<double> base = cfg.coordinates();
    const std::vector<double> f0 = f(cfg);
    const auto rows = static_cast<Eigen::Index>(f0.size());
    const auto cols = static_cast<Eigen::Index>(base.size());

    Eigen::MatrixXd jac(rows, cols);
    std::vector<double> coords = base;
    for (Eigen::Index j = 0; j < cols; ++j) {
        const double v = base[static_cast<std::size_t>(j)];
        const double h = step * std::max(1.0, std::abs(v));
        const double vp = v + h;
        const double vm = v - h;

        coords[static_cast<std::size_t>(j)] = vp;
        const std::vector<double> fp = f(JetConfiguration::from_coordinates(coords));
        coords[static_cast<std::size_t>(j)] = vm;
        const std::vector<double> fm = f(JetConfiguration::from_coordinates(coords));
        coords[static_cast<std::size_t>(j)] = v;

        if (fp.size() != f0.size() || fm.size() != f0.size()) {
            throw EvaluationFailure("inconsistent output length in fd_jacobian");
        }
        for (Eigen::Index i = 0; i < rows; ++i) {
            const double d = (fp[static_cast<std::size_t>(i)] - fm[static_cast<std::size_t>(i)]) / (vp - vm);
            if (!std::isfinite(d)) throw EvaluationFailure("non-finite finite difference");
            jac(i, j) = d;
        }
    }
    return jac;
}

RankReport independence_rank(int n, int trials, std::uint64_t seed, double step, double sv_threshold) {
    RankReport best;
    best.n = n;
    const VectorFunction f = [](const JetConfiguration& c) { return generating_set(c).as_vector(); };

    for (int t = 0; t < trials; ++t) {
        RngStream rng = RngStream::from_seed(seed, {0x52616E6BULL, static_cast<std::uint64_t>(t)});
        RankReport report;
        report.n = n;
        try {
            const JetConfiguration cfg = sample_general_config(rng, n);
            const Eigen::MatrixXd jac = fd_jacobian(f, cfg, step);
            report.rows = static_cast<int>(jac.rows());
            report.cols = static_cast<int>(jac.cols());
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
            const Eigen::VectorXd sv = svd.singularValues();
            report.singular_values.assign(sv.data(), sv.data() + sv.size());
            const double smax = report.singular_values.empty() ? 0.0 : report.singular_values.front();
            for (double s : report.singular_values) {
                if (s > smax * sv_threshold) ++report.rank;
            }
            if (smax > 0.0) report.sigma_ratio = report.singular_values.back() / smax;
            report.passes = report.rank == 4 * n - 8;
        } catch (const Error&) {
            continue;  // near-singular sample; try the next one
        }
        if (report.passes && (!best.passes || report.sigma_ratio > best.sigma_ratio)) {
            best = report;
        } else if (!best.passes && report.rank >= best.rank) {
            best = report;
        }
    }
    return best;
}

TrialReport invariance_trials(const VectorFunction& f, int trials, std::uint64_t seed, double spread,
                              int n) {
    TrialReport report;
    report.trials = trials;
    report.seed = seed;
    report.spread = spread;

    std::vector<double> residuals(static_cast<std::size_t>(trials), 0.0);
    std::vector<char> failed(static_cast<std::size_t>(trials), 0);
    for_each_index(static_cast<std::size_t>(trials), [&](std::size_t t) {
        try {
            RngStream rng = RngStream::from_seed(seed, {0x496E7661ULL, t});
            const TrialPair pair = sample_trial_pair(rng, n, spread);
            const std::vector<double> base = f(pair.cfg);
            const std::vector<double> moved = f(act_config(pair.g, pair.cfg));
            if (base.size() != moved.size()) throw EvaluationFailure("length mismatch");
            double worst = 0.0;
            for (std::size_t i = 0; i < base.size(); ++i) {
                const double res = std::abs(moved[i] - base[i]) / (std::abs(base[i]) + 1e-9);
                if (!std::isfinite(res)) throw EvaluationFailure("non-finite residual");
                worst = std::max(worst, res);
            }
            residuals[t] = worst;
        } catch (...) {
            failed[t] = 1;
        }
    });
    for (std::size_t t = 0; t < residuals.size(); ++t) {
        if (failed[t]) {
            ++report.failures;
        } else {
            report.max_rel_residual = std::max(report.max_rel_residual, residuals[t]);
        }
    }
    return report;
}

}  // namespace projinv
