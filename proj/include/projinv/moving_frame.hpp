#pragma once

#include <array>
#include <functional>

#include "projinv/homography.hpp"
#include "projinv/jet_config.hpp"

namespace projinv {

/// Group parameters of the frame element rho(x), with c3 fixed to 1. The
/// assembled homography carries the configuration onto the cross-section
///   x1 = 1, y1 = 0, p1 = 1, q1 = 0, x2 = y2 = 0, x3 = 0, y3 = 1.
struct FrameParameters {
    double a1 = 1.0, a2 = 0.0, a3 = 0.0;
    double b1 = 0.0, b2 = 1.0, b3 = 0.0;
    double c1 = 0.0, c2 = 0.0;

    Homography assemble() const;
};

struct FrameOptions {
    double eps_gp = kDefaultEpsGp;
    double eps_res = 1e-9;
};

/// Common denominator of the closed-form frame parameters:
/// delta_123 (q1 y1 + p1 x1) + x2 y3 - x3 y2.
double frame_denominator(const JetConfiguration& cfg);

/// Solves the eight normalization equations in closed form.
FrameParameters solve_frame(const JetConfiguration& cfg, const FrameOptions& opts = {});

/// Residuals of the eight normalization equations, evaluated by applying the
/// assembled element to the configuration and comparing the pinned
/// coordinates of blocks 1..3 against the cross-section constants. Order:
/// x1-1, y1, p1-1, q1, x2, y2, x3, y3-1.
std::array<double, 8> frame_residuals(const JetConfiguration& cfg, const FrameParameters& params);

struct NormalizedConfiguration {
    JetConfiguration cfg;
    FrameParameters frame;

    /// The 4n-8 coordinates not pinned by the cross-section, in the order
    /// (p2, q2, p3, q3, then x, y, p, q per block k >= 4).
    std::vector<double> free_coordinates() const;

    double max_pin_residual() const;
};

NormalizedConfiguration normalize(const JetConfiguration& cfg, const FrameOptions& opts = {});

/// iota(f)(x) = f(rho(x) . x); invariant in x, agrees with f on the
/// cross-section.
double invariantize(const std::function<double(const JetConfiguration&)>& f,
                    const JetConfiguration& cfg, const FrameOptions& opts = {});

}  // namespace projinv
