#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "projinv/homography.hpp"
#include "projinv/jet_config.hpp"
#include "projinv/moving_frame.hpp"
#include "projinv/rng.hpp"

namespace projinv {

/// Degree-m multiplicative cochain: a nonvanishing real-valued map on
/// G^m x M, evaluated on canonical representatives.
class Cochain {
public:
    using Eval = std::function<double(std::span<const Homography>, const JetConfiguration&)>;

    Cochain(int degree, Eval eval) : degree_(degree), eval_(std::move(eval)) {}

    int degree() const { return degree_; }

    double operator()(std::span<const Homography> groups, const JetConfiguration& x) const;

    static Cochain one(int degree);

private:
    int degree_;
    Eval eval_;
};

/// Bar-type multiplicative coboundary d^m: C^m -> C^{m+1}. Degree 0 uses the
/// convention (d0 c)(g, x) = c(g.x) / c(x).
Cochain coboundary(const Cochain& c);

/// Frame-induced homotopy h^m: C^m -> C^{m-1} obtained by freezing the first
/// group slot at rho(g1...g_{m-1} . x). Degree 1 maps to the inverse of the
/// invariantization, which is what the degree-0 coboundary convention above
/// requires for d^{m-1} h^m . h^{m+1} d^m = id.
Cochain homotopy(const Cochain& c, const FrameOptions& opts = {});

/// Degree-1 cochain g, x -> f(g.x) / f(x), the multiplier of the relative
/// invariant f.
Cochain coboundary_of_relative(std::function<double(const JetConfiguration&)> f);

/// The Jacobian multiplier as a degree-1 cochain (a 1-cocycle).
Cochain jacobian_cochain();

/// Positive smooth cochain: exp of a low-order polynomial in the canonical
/// matrix entries of the group slots and the configuration coordinates, with
/// coefficients uniform in [-0.3, 0.3].
Cochain sample_positive_cochain(RngStream& rng, int degree, int n);

struct HomotopyReport {
    int degree = 0;
    int trials = 0;
    int failures = 0;
    double max_rel_residual = 0.0;  // max |log(LHS/RHS)| of the contraction identity
    std::uint64_t seed = 0;
    double spread = 0.0;
};

using CochainSampler = std::function<Cochain(RngStream&, int degree, int n)>;

/// Samples (cochain, group tuple, configuration) triples and evaluates both
/// sides of d^{m-1} h^m c . h^{m+1} d^m c = c pointwise.
HomotopyReport verify_contraction(int m, int trials, std::uint64_t seed, double spread = 0.1,
                                  int n = 4, const CochainSampler& sampler = sample_positive_cochain);

}  // namespace projinv
