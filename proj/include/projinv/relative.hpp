#pragma once

#include <cstdint>
#include <functional>

#include "projinv/homography.hpp"
#include "projinv/jet_config.hpp"
#include "projinv/moving_frame.hpp"

namespace projinv {

/// Rational weight of a relative invariant; den is 1 or 3 so the real power
/// x^(num/den) is defined for negative x as well.
struct Weight {
    int num = 0;
    int den = 1;
};

/// Sign-preserving real power x^(num/den) for odd den.
double rational_power(double x, Weight w);

/// C(x) = J(rho(x), x): the Jacobian multiplier evaluated at the frame
/// element, a relative invariant of weight -1. Computed directly from the
/// solved frame, so the sign is exact.
double invariantized_jacobian(const JetConfiguration& cfg, const FrameOptions& opts = {});

/// Closed-form magnitude of C:
///   |delta_123^(2n-9) (Phi^(1)_12 Phi^(1)_13)^(n-3) prod_{k>=4} w_k^-3|.
double closed_form_c_magnitude(const JetConfiguration& cfg);

/// Same expression with the exact sign (-1)^n attached; equals
/// invariantized_jacobian on the general-position locus.
double closed_form_c_signed(const JetConfiguration& cfg);

/// z'_n = C^(-1/g) with g = gcd(n, 3); the cube root branch is the real,
/// sign-preserving one.
double primitive_element(const JetConfiguration& cfg, const FrameOptions& opts = {});

struct RelativeInvariantValue {
    double c_value = 0.0;
    double z_prime = 0.0;
    int g_div = 1;
    Weight c_weight{-1, 1};
    Weight z_weight{1, 1};  // 1/g
};

RelativeInvariantValue relative_invariants(const JetConfiguration& cfg, const FrameOptions& opts = {});

struct RelativeCheckReport {
    int trials = 0;
    int failures = 0;
    double max_rel_residual = 0.0;
    std::uint64_t seed = 0;
    double spread = 0.0;
};

/// Samples (configuration, homography) pairs and reports the worst relative
/// residual of f(g.x) - J(g,x)^w f(x).
RelativeCheckReport check_relative(const std::function<double(const JetConfiguration&)>& f,
                                   Weight weight, int trials, std::uint64_t seed,
                                   double spread = 0.2, int n = 4);

}  // namespace projinv
