#include "projinv/suites.hpp"

#include <algorithm>
#include <cmath>

#include "projinv/cochain.hpp"
#include "projinv/image.hpp"
#include "projinv/invariants.hpp"
#include "projinv/moving_frame.hpp"
#include "projinv/relative.hpp"
#include "projinv/sampling.hpp"
#include "projinv/verification.hpp"

namespace projinv {

namespace {

double rel(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

double entrywise_rel(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b) {
    const double scale = std::max({1.0, a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
    return (a - b).cwiseAbs().maxCoeff() / scale;
}

}  // namespace

SuiteResult frame_suite(std::uint64_t seed, int configs_per_n, double spread) {
    double worst_residual = 0.0;
    double worst_equivariance = 0.0;
    int failures = 0;
    for (int n = 3; n <= 6; ++n) {
        for (int t = 0; t < configs_per_n; ++t) {
            try {
                RngStream rng = RngStream::from_seed(seed, {0x4672616DULL, static_cast<std::uint64_t>(n),
                                                            static_cast<std::uint64_t>(t)});
                const TrialPair pair = sample_trial_pair(rng, n, spread);

                const FrameParameters params = solve_frame(pair.cfg);
                double chart_scale = 1.0;
                for (double v : normalize(pair.cfg).free_coordinates()) {
                    chart_scale = std::max(chart_scale, std::abs(v));
                }
                for (double r : frame_residuals(pair.cfg, params)) {
                    worst_residual = std::max(worst_residual, std::abs(r) / chart_scale);
                }

                const Homography lhs = solve_frame(act_config(pair.g, pair.cfg)).assemble();
                const Homography rhs = params.assemble() * pair.g.inverse();
                worst_equivariance = std::max(worst_equivariance, entrywise_rel(lhs.matrix(), rhs.matrix()));
            } catch (const Error&) {
                ++failures;
            }
        }
    }
    SuiteResult out;
    out.name = "frame";
    out.passes = failures == 0 && worst_residual <= kFrameResidualTol && worst_equivariance <= kEquivarianceTol;
    out.details = json{{"configs_per_n", configs_per_n},
                       {"failures", failures},
                       {"max_residual", worst_residual},
                       {"residual_tol", kFrameResidualTol},
                       {"max_equivariance", worst_equivariance},
                       {"equivariance_tol", kEquivarianceTol}};
    return out;
}

SuiteResult invariance_suite(std::uint64_t seed, int trials_per_n, double spread) {
    double worst = 0.0;
    int failures = 0;
    json per_n = json::object();
    for (int n = 3; n <= 6; ++n) {
        const TrialReport report = invariance_trials(
            [](const JetConfiguration& c) { return generating_set(c).as_vector(); }, trials_per_n,
            seed + static_cast<std::uint64_t>(n), spread, n);
        worst = std::max(worst, report.max_rel_residual);
        failures += report.failures;
        per_n["n" + std::to_string(n)] = report.max_rel_residual;
    }
    SuiteResult out;
    out.name = "invariance";
    out.passes = failures == 0 && worst <= kInvarianceTol;
    out.details = json{{"trials_per_n", trials_per_n},
                       {"failures", failures},
                       {"max_rel_residual", worst},
                       {"per_n", per_n},
                       {"tol", kInvarianceTol}};
    return out;
}

SuiteResult frame_agreement_suite(std::uint64_t seed, int trials) {
    double worst = 0.0;
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
        try {
            RngStream rng = RngStream::from_seed(seed, {0x41677265ULL, static_cast<std::uint64_t>(t)});
            const int n = 3 + t % 4;
            const JetConfiguration cfg = sample_general_config(rng, n);
            const std::vector<double> closed = iota_coordinates(cfg).as_vector();
            const std::vector<double> framed = normalize(cfg).free_coordinates();
            for (std::size_t i = 0; i < closed.size(); ++i) {
                worst = std::max(worst, std::abs(closed[i] - framed[i]) /
                                            (std::max(std::abs(closed[i]), std::abs(framed[i])) + 1e-12));
            }
        } catch (const Error&) {
            ++failures;
        }
    }
    SuiteResult out;
    out.name = "frame_agreement";
    out.passes = failures == 0 && worst <= kFrameAgreementTol;
    out.details = json{{"trials", trials}, {"failures", failures}, {"max_rel_residual", worst},
                       {"tol", kFrameAgreementTol}};
    return out;
}

SuiteResult relations_suite(std::uint64_t seed, int trials) {
    double worst = 0.0;
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
        try {
            RngStream rng = RngStream::from_seed(seed, {0x52656C73ULL, static_cast<std::uint64_t>(t)});
            const int n = 3 + t % 2;
            const JetConfiguration cfg = sample_general_config(rng, n);
            const ZetaBasis z = basis_n3(cfg);
            const IotaCoordinates io = iota_coordinates(cfg);
            const double tp = tau_prime(cfg);

            // iota(q2) iota(q3) = zeta23
            worst = std::max(worst, std::abs(io.q2 * io.q3 - z.zeta23) / (std::abs(z.zeta23) + 1e-12));
            // iota(p3) = zeta13 + iota(q3)
            worst = std::max(worst, std::abs(io.p3 - (z.zeta13 + io.q3)) /
                                        (std::max({std::abs(io.p3), std::abs(z.zeta13), std::abs(io.q3)}) + 1e-12));
            // iota(p2) iota(q3) = -tau
            worst = std::max(worst, std::abs(io.p2 * io.q3 + z.tau) / (std::abs(z.tau) + 1e-12));
            // tau' = tau - zeta12 zeta13 zeta23 / tau
            const double predicted = z.tau - z.zeta12 * z.zeta13 * z.zeta23 / z.tau;
            worst = std::max(worst, std::abs(tp - predicted) /
                                        (std::max(std::abs(tp), std::abs(predicted)) + 1e-12));
        } catch (const Error&) {
            ++failures;
        }
    }
    SuiteResult out;
    out.name = "relations";
    out.passes = failures == 0 && worst <= kRelationTol;
    out.details = json{{"trials", trials}, {"failures", failures}, {"max_rel_residual", worst},
                       {"tol", kRelationTol}};
    return out;
}

SuiteResult rank_suite(std::uint64_t seed, int trials_per_n) {
    bool all = true;
    json per_n = json::array();
    for (int n : {3, 4, 5}) {
        const RankReport report = independence_rank(n, trials_per_n, seed + static_cast<std::uint64_t>(n));
        const bool ok = report.passes && report.sigma_ratio >= kRankSigmaRatio;
        all = all && ok;
        per_n.push_back(json{{"n", n},
                             {"rank", report.rank},
                             {"expected", 4 * n - 8},
                             {"sigma_ratio", report.sigma_ratio},
                             {"passes", ok}});
    }
    SuiteResult out;
    out.name = "rank";
    out.passes = all;
    out.details = json{{"trials_per_n", trials_per_n}, {"per_n", per_n}, {"sigma_ratio_min", kRankSigmaRatio}};
    return out;
}

SuiteResult relative_suite(std::uint64_t seed, int trials) {
    int failures = 0;

    double worst_weight_minus1 = 0.0;
    for (int n = 3; n <= 6; ++n) {
        const RelativeCheckReport report = check_relative(
            [](const JetConfiguration& c) { return invariantized_jacobian(c); }, Weight{-1, 1},
            std::max(1, trials / 4), seed + static_cast<std::uint64_t>(n), 0.2, n);
        failures += report.failures;
        worst_weight_minus1 = std::max(worst_weight_minus1, report.max_rel_residual);
    }

    double worst_closed = 0.0;
    for (int t = 0; t < std::max(1, trials / 4); ++t) {
        try {
            RngStream rng = RngStream::from_seed(seed, {0x436C6F73ULL, static_cast<std::uint64_t>(t)});
            const int n = 3 + t % 4;
            const JetConfiguration cfg = sample_general_config(rng, n);
            const double direct = invariantized_jacobian(cfg);
            worst_closed = std::max(worst_closed, rel(std::abs(direct), closed_form_c_magnitude(cfg)));
            worst_closed = std::max(worst_closed, rel(direct, closed_form_c_signed(cfg)));
        } catch (const Error&) {
            ++failures;
        }
    }

    double worst_weight = 0.0;
    json weight_details = json::array();
    for (int n : {3, 4, 6}) {
        const int g = std::gcd(n, 3);
        const RelativeCheckReport report = check_relative(
            [](const JetConfiguration& c) { return primitive_element(c); }, Weight{1, g},
            std::max(1, trials / 4), seed + 100 + static_cast<std::uint64_t>(n), 0.2, n);
        failures += report.failures;
        worst_weight = std::max(worst_weight, report.max_rel_residual);
        weight_details.push_back(json{{"n", n}, {"g", g}, {"max_rel_residual", report.max_rel_residual}});
    }

    SuiteResult out;
    out.name = "relative";
    out.passes = failures == 0 && worst_weight_minus1 <= kWeightMinusOneTol && worst_closed <= kClosedFormTol &&
                 worst_weight <= kWeightLawTol;
    out.details = json{{"trials", trials},
                       {"failures", failures},
                       {"max_weight_minus1_residual", worst_weight_minus1},
                       {"weight_minus1_tol", kWeightMinusOneTol},
                       {"max_closed_form_residual", worst_closed},
                       {"closed_form_tol", kClosedFormTol},
                       {"max_weight_law_residual", worst_weight},
                       {"weight_law_tol", kWeightLawTol},
                       {"weight_law", weight_details}};
    return out;
}

SuiteResult cochain_suite(std::uint64_t seed, int trials) {
    int failures = 0;

    const Cochain jac = jacobian_cochain();
    double worst_cocycle = 0.0;
    double worst_th5 = 0.0;
    const Cochain reconstructed = coboundary(homotopy(jac));
    for (int t = 0; t < trials; ++t) {
        try {
            RngStream rng = RngStream::from_seed(seed, {0x4A636F63ULL, static_cast<std::uint64_t>(t)});
            const JetConfiguration cfg = sample_general_config(rng, 4);
            std::vector<Homography> gs;
            gs.push_back(sample_homography(rng.next_u64(), 0.1));
            gs.push_back(sample_homography(rng.next_u64(), 0.1));
            worst_cocycle = std::max(worst_cocycle, std::abs(coboundary(jac)(gs, cfg) - 1.0));

            const std::vector<Homography> g1(gs.begin(), gs.begin() + 1);
            worst_th5 = std::max(worst_th5, rel(reconstructed(g1, cfg), jac(g1, cfg)));
        } catch (const Error&) {
            ++failures;
        }
    }

    double worst_dd = 0.0;
    for (int t = 0; t < trials; ++t) {
        try {
            RngStream rng = RngStream::from_seed(seed, {0x6464634ULL, static_cast<std::uint64_t>(t)});
            const JetConfiguration cfg = sample_general_config(rng, 4);
            for (int degree : {0, 1}) {
                const Cochain c = sample_positive_cochain(rng, degree, 4);
                const Cochain dd = coboundary(coboundary(c));
                std::vector<Homography> gs;
                for (int i = 0; i < degree + 2; ++i) gs.push_back(sample_homography(rng.next_u64(), 0.1));
                worst_dd = std::max(worst_dd, std::abs(dd(gs, cfg) - 1.0));
            }
        } catch (const Error&) {
            ++failures;
        }
    }

    double worst_contraction = 0.0;
    json contraction = json::array();
    for (int m : {1, 2, 3}) {
        const HomotopyReport report = verify_contraction(m, trials, seed + static_cast<std::uint64_t>(m), 0.1, 4);
        failures += report.failures;
        worst_contraction = std::max(worst_contraction, report.max_rel_residual);
        contraction.push_back(json{{"m", m}, {"max_rel_residual", report.max_rel_residual},
                                   {"failures", report.failures}});
    }

    SuiteResult out;
    out.name = "cochain";
    out.passes = failures == 0 && worst_cocycle <= kCocycleTol && worst_dd <= kDoubleCoboundaryTol &&
                 worst_contraction <= kContractionTol && worst_th5 <= kReconstructionTol;
    out.details = json{{"trials", trials},
                       {"failures", failures},
                       {"max_cocycle_residual", worst_cocycle},
                       {"cocycle_tol", kCocycleTol},
                       {"max_double_coboundary_residual", worst_dd},
                       {"double_coboundary_tol", kDoubleCoboundaryTol},
                       {"max_contraction_residual", worst_contraction},
                       {"contraction_tol", kContractionTol},
                       {"contraction", contraction},
                       {"max_reconstruction_residual", worst_th5},
                       {"reconstruction_tol", kReconstructionTol}};
    return out;
}

namespace {

GaussianBlobField warp_test_field(int size) {
    const double s = static_cast<double>(size);
    // centers/sigmas in image fractions; amplitudes keep 0.5 + value strictly
    // inside (0, 1) so the render never clamps into flat plateaus
    GaussianBlobField field;
    field.blobs = {
        {0.32 * s, 0.36 * s, 0.085 * s, 0.22},
        {0.66 * s, 0.30 * s, 0.110 * s, -0.18},
        {0.58 * s, 0.64 * s, 0.095 * s, 0.20},
        {0.30 * s, 0.68 * s, 0.120 * s, -0.15},
        {0.50 * s, 0.48 * s, 0.160 * s, 0.18},
    };
    return field;
}

GrayImage render_with_bias(const GaussianBlobField& field, int size) {
    GrayImage img;
    img.width = size;
    img.height = size;
    img.data.resize(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
    for (int y = 0; y < size; ++y) {
        for (int x = 0; x < size; ++x) {
            img.data[static_cast<std::size_t>(y) * static_cast<std::size_t>(size) + static_cast<std::size_t>(x)] =
                std::clamp(0.5 + field.value(x, y), 0.0, 1.0);
        }
    }
    return img;
}

Homography unit_rescale(int size) {
    Eigen::Matrix3d to_unit;
    to_unit << 2.0 / (size - 1), 0.0, -1.0, 0.0, 2.0 / (size - 1), -1.0, 0.0, 0.0, 1.0;
    return Homography(to_unit);
}

/// Amplification of relative jet error into relative feature error, probed
/// with two deterministic multiplicative jitters of the gradient entries.
double feature_condition(const JetConfiguration& cfg, RngStream& rng) {
    constexpr double kJitter = 1e-3;
    const std::vector<double> base = generating_set(cfg).as_vector();
    double cond = 0.0;
    for (int pattern = 0; pattern < 2; ++pattern) {
        std::vector<JetBlock> blocks = cfg.blocks();
        for (JetBlock& b : blocks) {
            b.p *= 1.0 + kJitter * rng.uniform(-1.0, 1.0);
            b.q *= 1.0 + kJitter * rng.uniform(-1.0, 1.0);
        }
        const std::vector<double> moved = generating_set(JetConfiguration(blocks)).as_vector();
        for (std::size_t i = 0; i < base.size(); ++i) {
            cond = std::max(cond, std::abs(moved[i] - base[i]) / (std::abs(base[i]) * kJitter));
        }
    }
    return cond;
}

}  // namespace

SuiteResult image_suite(std::uint64_t seed, int image_size, int warp_configs) {
    int failures = 0;

    // Sobel accuracy on a centered Gaussian, probed where the gradient is strong.
    double worst_sobel = 0.0;
    {
        const int size = 64;
        GaussianBlobField field;
        field.blobs = {{size / 2.0, size / 2.0, 6.0, 0.8}};
        const GrayImage img = field.render(size, size);
        double max_norm = 0.0;
        for (int y = 2; y < size - 2; ++y) {
            for (int x = 2; x < size - 2; ++x) {
                const auto g = field.gradient(x, y);
                max_norm = std::max(max_norm, std::hypot(g[0], g[1]));
            }
        }
        for (int y = 2; y < size - 2; ++y) {
            for (int x = 2; x < size - 2; ++x) {
                const auto g = field.gradient(x, y);
                const double norm = std::hypot(g[0], g[1]);
                if (norm < 0.6 * max_norm) continue;  // strong-gradient probe band
                const JetConfiguration cfg = sobel_jet(img, {{static_cast<double>(x), static_cast<double>(y)},
                                                             {1.5, 1.5},
                                                             {static_cast<double>(size - 2), 1.5}});
                const JetBlock est = cfg.block(1);
                worst_sobel = std::max(worst_sobel, std::hypot(est.p - g[0], est.q - g[1]) / norm);
            }
        }
    }

    // Feature robustness under a near-identity warp, and exactness with
    // analytically injected jets.
    double worst_warp = 0.0;
    double worst_injected = 0.0;
    {
        const int size = image_size;
        const GaussianBlobField field = warp_test_field(size);
        const GrayImage img = render_with_bias(field, size);
        const Homography to_unit = unit_rescale(size);
        const int n = 4;
        const double inner = 0.16 * size;
        const double min_dist = 0.08 * size;

        int accepted = 0;
        std::uint64_t attempt = 0;
        while (accepted < warp_configs && attempt < 20000) {
            RngStream rng = RngStream::from_seed(seed, {0x57617270ULL, attempt++});
            std::vector<PixelPoint> pts(static_cast<std::size_t>(n));
            for (auto& pt : pts) {
                pt = {rng.uniform(inner, size - 1 - inner), rng.uniform(inner, size - 1 - inner)};
            }
            bool ok = true;
            for (std::size_t i = 0; i < pts.size() && ok; ++i) {
                const auto g = field.gradient(pts[i][0], pts[i][1]);
                if (std::hypot(g[0], g[1]) * size < 0.7) ok = false;  // unit-coordinate gradient floor
                for (std::size_t j = 0; j < i; ++j) {
                    if (std::hypot(pts[i][0] - pts[j][0], pts[i][1] - pts[j][1]) < min_dist) ok = false;
                }
            }
            if (!ok) continue;

            const Homography g_px = conjugate_to_pixels(sample_homography(rng.next_u64(), 0.05), size, size);
            try {
                // analytic side first: exact jets, exact transport
                std::vector<JetBlock> exact_blocks;
                for (const auto& pt : pts) exact_blocks.push_back(field.jet_at(pt[0], pt[1]));
                JetConfiguration exact_cfg(exact_blocks);
                const JetConfiguration exact_unit = act_config(to_unit, exact_cfg);
                if (config_margin(exact_unit) < 4e-2) continue;
                if (feature_condition(exact_unit, rng) > 2.0) continue;

                const std::vector<double> f_exact = generating_set(exact_unit).as_vector();
                const std::vector<double> f_exact_moved =
                    generating_set(act_config(to_unit, act_config(g_px, exact_cfg))).as_vector();

                for (std::size_t i = 0; i < f_exact.size(); ++i) {
                    worst_injected = std::max(worst_injected, rel(f_exact[i], f_exact_moved[i]));
                }

                // estimated side: Sobel jets on the original and warped rasters
                std::vector<PixelPoint> moved_pts;
                for (const auto& pt : pts) moved_pts.push_back(act_point(g_px, pt));
                bool interior = true;
                for (const auto& pt : moved_pts) {
                    if (pt[0] < 2 || pt[0] > size - 3 || pt[1] < 2 || pt[1] > size - 3) interior = false;
                }
                if (!interior) continue;

                const GrayImage warped = warp_image(img, g_px);
                const JetConfiguration est_base = act_config(to_unit, sobel_jet(img, pts));
                const JetConfiguration est_moved = act_config(to_unit, sobel_jet(warped, moved_pts));
                if (config_margin(est_base) < 4e-2 || config_margin(est_moved) < 4e-2) continue;
                const std::vector<double> f_base = generating_set(est_base).as_vector();
                const std::vector<double> f_moved = generating_set(est_moved).as_vector();
                for (std::size_t i = 0; i < f_base.size(); ++i) {
                    worst_warp = std::max(worst_warp, rel(f_base[i], f_moved[i]));
                }
                ++accepted;
            } catch (const Error&) {
                continue;
            }
        }
        if (accepted < warp_configs) ++failures;
    }

    SuiteResult out;
    out.name = "image";
    out.passes = failures == 0 && worst_sobel <= kSobelTol && worst_warp <= kWarpFeatureTol &&
                 worst_injected <= kInjectedJetTol;
    out.details = json{{"image_size", image_size},
                       {"warp_configs", warp_configs},
                       {"failures", failures},
                       {"max_sobel_rel_error", worst_sobel},
                       {"sobel_tol", kSobelTol},
                       {"max_warp_feature_residual", worst_warp},
                       {"warp_tol", kWarpFeatureTol},
                       {"max_injected_jet_residual", worst_injected},
                       {"injected_tol", kInjectedJetTol}};
    return out;
}

}  // namespace projinv
