#pragma once

#include <cstdint>
#include <string>

#include "projinv/json_io.hpp"

namespace projinv {

/// Outcome of one verification suite. `details` carries the measured worst
/// residuals next to the thresholds they were compared against.
struct SuiteResult {
    std::string name;
    bool passes = false;
    json details;
};

// Thresholds are fixed here, not tunable per run.
inline constexpr double kFrameResidualTol = 1e-9;
inline constexpr double kEquivarianceTol = 1e-8;
inline constexpr double kInvarianceTol = 1e-8;
inline constexpr double kFrameAgreementTol = 1e-9;
inline constexpr double kRelationTol = 1e-10;
inline constexpr double kRankSigmaRatio = 1e-6;
inline constexpr double kWeightMinusOneTol = 1e-8;
inline constexpr double kClosedFormTol = 1e-9;
inline constexpr double kWeightLawTol = 1e-8;
inline constexpr double kCocycleTol = 1e-9;
inline constexpr double kDoubleCoboundaryTol = 1e-8;
inline constexpr double kContractionTol = 1e-7;
inline constexpr double kReconstructionTol = 1e-9;
inline constexpr double kSobelTol = 2e-2;
inline constexpr double kWarpFeatureTol = 2e-2;
inline constexpr double kInjectedJetTol = 1e-9;

/// Normalization residuals and frame equivariance over random
/// general-position configurations, n = 3..6.
SuiteResult frame_suite(std::uint64_t seed, int configs_per_n, double spread = 0.2);

/// Invariance of the full generating set under sampled homographies.
SuiteResult invariance_suite(std::uint64_t seed, int trials_per_n, double spread = 0.2);

/// Closed-form normalized coordinates against the moving-frame path.
SuiteResult frame_agreement_suite(std::uint64_t seed, int trials);

/// The relations among the iota coordinates, the zeta basis and tau_prime.
SuiteResult relations_suite(std::uint64_t seed, int trials);

/// Numerical rank of the generating set for n = 3, 4, 5.
SuiteResult rank_suite(std::uint64_t seed, int trials_per_n);

/// Weight laws of the invariantized Jacobian and the primitive element, plus
/// the closed-form magnitude agreement.
SuiteResult relative_suite(std::uint64_t seed, int trials);

/// Cocycle identity, double coboundaries, contraction identity for
/// m = 1, 2, 3 and the cocycle reconstruction through the homotopy.
SuiteResult cochain_suite(std::uint64_t seed, int trials);

/// Raster pipeline: Sobel accuracy on a Gaussian image, feature robustness
/// under near-identity warps, and exactness with injected analytic jets.
SuiteResult image_suite(std::uint64_t seed, int image_size, int warp_configs);

}  // namespace projinv
