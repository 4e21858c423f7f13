#include "projinv/relative.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "projinv/parallel.hpp"
#include "projinv/sampling.hpp"

namespace projinv {

namespace {

double ipow(double base, int exponent) {
    if (exponent < 0) return 1.0 / ipow(base, -exponent);
    double out = 1.0;
    double acc = base;
    for (int e = exponent; e > 0; e >>= 1) {
        if (e & 1) out *= acc;
        acc *= acc;
    }
    return out;
}

}  // namespace

double rational_power(double x, Weight w) {
    if (w.den <= 0 || w.den % 2 == 0) throw EvaluationFailure("weight denominator must be odd positive");
    if (w.num == 0) return 1.0;
    if (x == 0.0) {
        if (w.num > 0) return 0.0;
        throw ZeroValue("zero base with negative weight");
    }
    const double mag = std::pow(std::abs(x), static_cast<double>(w.num) / static_cast<double>(w.den));
    return (x < 0.0 && (w.num % 2 != 0)) ? -mag : mag;
}

double invariantized_jacobian(const JetConfiguration& cfg, const FrameOptions& opts) {
    const FrameParameters params = solve_frame(cfg, opts);
    return jacobian_multiplier(params.assemble(), cfg);
}

double closed_form_c_magnitude(const JetConfiguration& cfg) {
    return std::abs(closed_form_c_signed(cfg));
}

double closed_form_c_signed(const JetConfiguration& cfg) {
    const int n = cfg.size();
    const double d = delta(cfg, 1, 2, 3);
    const double phi12 = phi(cfg, 1, 1, 2);
    const double phi13 = phi(cfg, 1, 1, 3);
    double value = ipow(d, 2 * n - 9) * ipow(phi12 * phi13, n - 3);
    for (int k = 4; k <= n; ++k) value /= ipow(xi_denominator(cfg, k), 3);
    if (!std::isfinite(value)) throw DenominatorNearZero("closed-form C");
    return (n % 2 == 0) ? value : -value;
}

double primitive_element(const JetConfiguration& cfg, const FrameOptions& opts) {
    const double c = invariantized_jacobian(cfg, opts);
    if (c == 0.0 || !std::isfinite(c)) throw ZeroValue("invariantized Jacobian is zero");
    const int g = std::gcd(cfg.size(), 3);
    return (g == 1) ? 1.0 / c : std::cbrt(1.0 / c);
}

RelativeInvariantValue relative_invariants(const JetConfiguration& cfg, const FrameOptions& opts) {
    RelativeInvariantValue out;
    out.c_value = invariantized_jacobian(cfg, opts);
    out.g_div = std::gcd(cfg.size(), 3);
    out.z_prime = (out.g_div == 1) ? 1.0 / out.c_value : std::cbrt(1.0 / out.c_value);
    out.c_weight = Weight{-1, 1};
    out.z_weight = Weight{1, out.g_div};
    return out;
}

RelativeCheckReport check_relative(const std::function<double(const JetConfiguration&)>& f,
                                   Weight weight, int trials, std::uint64_t seed, double spread,
                                   int n) {
    RelativeCheckReport report;
    report.trials = trials;
    report.seed = seed;
    report.spread = spread;

    std::vector<double> residuals(static_cast<std::size_t>(trials), 0.0);
    std::vector<char> failed(static_cast<std::size_t>(trials), 0);
    for_each_index(static_cast<std::size_t>(trials), [&](std::size_t t) {
        try {
            RngStream rng = RngStream::from_seed(seed, {0x52656C61ULL, t});
            const TrialPair pair = sample_trial_pair(rng, n, spread);
            const double lhs = f(act_config(pair.g, pair.cfg));
            const double rhs = rational_power(jacobian_multiplier(pair.g, pair.cfg), weight) * f(pair.cfg);
            const double scale = std::max(std::abs(lhs), std::abs(rhs)) + 1e-30;
            const double res = std::abs(lhs - rhs) / scale;
            if (!std::isfinite(res)) throw EvaluationFailure("non-finite residual");
            residuals[t] = res;
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
