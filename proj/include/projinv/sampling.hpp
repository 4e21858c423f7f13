#pragma once

#include "projinv/homography.hpp"
#include "projinv/jet_config.hpp"
#include "projinv/rng.hpp"

namespace projinv {

/// Smallest magnitude among the bracket quantities the closed-form invariants
/// and the frame solve divide by. Configurations are expected to live in the
/// unit box, so the values are compared without rescaling.
double config_margin(const JetConfiguration& cfg);

/// Uniform configuration in [-1, 1]^2 (points and gradients), resampled until
/// config_margin clears the requested floor.
JetConfiguration sample_general_config(RngStream& rng, int n, double margin = 0.05,
                                       int max_attempts = 4000);

struct TrialPair {
    JetConfiguration cfg;
    Homography g;
};

/// A general-position configuration plus a near-identity homography whose
/// image configuration also clears (a fraction of) the margin, so trial
/// residuals measure arithmetic error rather than conditioning.
TrialPair sample_trial_pair(RngStream& rng, int n, double spread, double margin = 0.05);

}  // namespace projinv
