#include "projinv/cochain.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "projinv/parallel.hpp"
#include "projinv/sampling.hpp"

namespace projinv {

double Cochain::operator()(std::span<const Homography> groups, const JetConfiguration& x) const {
    if (static_cast<int>(groups.size()) != degree_) {
        throw EvaluationFailure("cochain of degree " + std::to_string(degree_) + " given " +
                                std::to_string(groups.size()) + " group arguments");
    }
    const double v = eval_(groups, x);
    if (!std::isfinite(v)) throw EvaluationFailure("non-finite cochain value");
    if (v == 0.0) throw ZeroValue("cochain value must be nonzero");
    return v;
}

Cochain Cochain::one(int degree) {
    return Cochain(degree, [](std::span<const Homography>, const JetConfiguration&) { return 1.0; });
}

Cochain coboundary(const Cochain& c) {
    const int m = c.degree();
    if (m == 0) {
        return Cochain(1, [c](std::span<const Homography> gs, const JetConfiguration& x) {
            return c({}, act_config(gs[0], x)) / c({}, x);
        });
    }
    return Cochain(m + 1, [c, m](std::span<const Homography> gs, const JetConfiguration& x) {
        // leading face: drop g1
        std::vector<Homography> args(gs.begin() + 1, gs.end());
        double value = c(args, x);
        // inner faces: merge adjacent slots, alternating exponents
        for (int i = 1; i <= m; ++i) {
            args.assign(gs.begin(), gs.end());
            args[static_cast<std::size_t>(i - 1)] = gs[static_cast<std::size_t>(i - 1)] * gs[static_cast<std::size_t>(i)];
            args.erase(args.begin() + i);
            const double face = c(args, x);
            value = (i % 2 == 1) ? value / face : value * face;
        }
        // trailing face: drop g_{m+1}, shift the configuration
        args.assign(gs.begin(), gs.end() - 1);
        const double face = c(args, act_config(gs[static_cast<std::size_t>(m)], x));
        return ((m + 1) % 2 == 1) ? value / face : value * face;
    });
}

Cochain homotopy(const Cochain& c, const FrameOptions& opts) {
    const int m = c.degree();
    if (m < 1) throw EvaluationFailure("homotopy needs degree >= 1");
    if (m == 1) {
        return Cochain(0, [c, opts](std::span<const Homography>, const JetConfiguration& x) {
            const Homography rho = solve_frame(x, opts).assemble();
            return 1.0 / c(std::span<const Homography>(&rho, 1), x);
        });
    }
    return Cochain(m - 1, [c, opts](std::span<const Homography> gs, const JetConfiguration& x) {
        JetConfiguration shifted = x;
        for (auto it = gs.rbegin(); it != gs.rend(); ++it) shifted = act_config(*it, shifted);
        std::vector<Homography> args;
        args.reserve(gs.size() + 1);
        args.push_back(solve_frame(shifted, opts).assemble());
        args.insert(args.end(), gs.begin(), gs.end());
        return c(args, x);
    });
}

Cochain coboundary_of_relative(std::function<double(const JetConfiguration&)> f) {
    return Cochain(1, [f = std::move(f)](std::span<const Homography> gs, const JetConfiguration& x) {
        const double base = f(x);
        if (base == 0.0 || !std::isfinite(base)) throw ZeroValue("relative function vanishes at sample");
        return f(act_config(gs[0], x)) / base;
    });
}

Cochain jacobian_cochain() {
    return Cochain(1, [](std::span<const Homography> gs, const JetConfiguration& x) {
        return jacobian_multiplier(gs[0], x);
    });
}

Cochain sample_positive_cochain(RngStream& rng, int degree, int n) {
    struct Atom {
        int slot;    // -1: configuration coordinate, otherwise group index
        int index;   // coordinate index or row*3+col
    };
    struct Term {
        double coeff;
        std::vector<Atom> atoms;
    };

    constexpr int kTerms = 6;
    std::vector<Term> terms(kTerms);
    for (Term& term : terms) {
        term.coeff = rng.uniform(-0.3, 0.3);
        const int arity = rng.uniform_int(1, 2);
        for (int a = 0; a < arity; ++a) {
            Atom atom{};
            if (degree > 0 && rng.uniform01() < 0.5) {
                atom.slot = rng.uniform_int(0, degree - 1);
                atom.index = rng.uniform_int(0, 7);  // the fixed c3 entry carries no information
            } else {
                atom.slot = -1;
                atom.index = rng.uniform_int(0, 4 * n - 1);
            }
            term.atoms.push_back(atom);
        }
    }

    // Atoms pass through tanh: the homotopy substitutes frame elements into
    // the group slots, whose entries are unbounded near thin configurations,
    // and a bare polynomial under exp would overflow there.
    return Cochain(degree, [terms](std::span<const Homography> gs, const JetConfiguration& x) {
        const std::vector<double> coords = x.coordinates();
        double sum = 0.0;
        for (const Term& term : terms) {
            double prod = term.coeff;
            for (const Atom& atom : term.atoms) {
                if (atom.slot < 0) {
                    prod *= std::tanh(coords[static_cast<std::size_t>(atom.index) % coords.size()]);
                } else {
                    const Eigen::Matrix3d& m = gs[static_cast<std::size_t>(atom.slot)].matrix();
                    prod *= std::tanh(m(atom.index / 3, atom.index % 3));
                }
            }
            sum += prod;
        }
        return std::exp(sum);
    });
}

HomotopyReport verify_contraction(int m, int trials, std::uint64_t seed, double spread, int n,
                                  const CochainSampler& sampler) {
    if (m < 1) throw EvaluationFailure("contraction identity needs m >= 1");
    HomotopyReport report;
    report.degree = m;
    report.trials = trials;
    report.seed = seed;
    report.spread = spread;

    std::vector<double> residuals(static_cast<std::size_t>(trials), 0.0);
    std::vector<char> failed(static_cast<std::size_t>(trials), 0);
    for_each_index(static_cast<std::size_t>(trials), [&](std::size_t t) {
        try {
            RngStream rng = RngStream::from_seed(seed, {0x436F6368ULL, t});
            const Cochain c = sampler(rng, m, n);
            const JetConfiguration cfg = sample_general_config(rng, n);
            std::vector<Homography> gs;
            gs.reserve(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) gs.push_back(sample_homography(rng.next_u64(), spread));

            const double lhs = coboundary(homotopy(c))(gs, cfg) * homotopy(coboundary(c))(gs, cfg);
            const double rhs = c(gs, cfg);
            const double res = std::abs(std::log(lhs / rhs));
            if (!std::isfinite(res)) throw EvaluationFailure("non-finite contraction residual");
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
