#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "projinv/homography.hpp"
#include "projinv/invariants.hpp"
#include "projinv/jet_config.hpp"
#include "projinv/moving_frame.hpp"

namespace projinv {

/// Row-major grayscale raster with intensities in [0, 1].
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<double> data;

    double at(int x, int y) const;
    /// Bilinear sample with clamped borders.
    double sample(double x, double y) const;
};

GrayImage load_pgm(const std::string& path);
void save_pgm(const GrayImage& img, const std::string& path, int bits = 16);

using PixelPoint = std::array<double, 2>;

/// Jets from the 3x3 Sobel stencils (scaled 1/8 per unit pixel) applied to
/// bilinear samples around each point. Points must sit at least one pixel
/// inside the border.
JetConfiguration sobel_jet(const GrayImage& img, const std::vector<PixelPoint>& pts);

struct FeatureSample {
    JetConfiguration cfg;
    InvariantVector features;
    double c_value = 0.0;
};

FeatureSample feature_at(const GrayImage& img, const std::vector<PixelPoint>& pts);

/// F = C(cfg) * prod_i u_i: a pointwise weight-(-1) integrand. Transporting
/// the configuration by g and keeping the intensity samples multiplies F by
/// J(g, cfg)^{-1}.
double mc_weight_integrand(const JetConfiguration& cfg, const std::vector<double>& u_values);

struct McReport {
    double estimate = 0.0;
    double stderr_estimate = 0.0;
    std::int64_t samples = 0;
    std::int64_t accepted = 0;
    std::int64_t skipped = 0;
};

/// Monte Carlo mean of the weight integrand over uniform interior
/// configurations; samples failing the general-position or frame-denominator
/// predicate are skipped and counted. Experimental: no convergence claim.
McReport mc_descriptor(const GrayImage& img, int n, std::int64_t samples, std::uint64_t seed);

/// Predicate used by mc_descriptor to skip degenerate samples.
bool mc_sample_degenerate(const JetConfiguration& cfg);

/// Inverse-mapping bilinear warp: out(z) = img(g^{-1}(z)).
GrayImage warp_image(const GrayImage& img, const Homography& g);

/// Conjugates a homography on [-1, 1]^2 into pixel coordinates, so that
/// near-identity perturbations stay near-identity across the whole raster.
Homography conjugate_to_pixels(const Homography& unit_g, int width, int height);

/// Sum of isotropic Gaussian blobs; provides exact values and first
/// derivatives for estimator tests and analytic jet injection.
struct GaussianBlobField {
    struct Blob {
        double cx, cy, sigma, amplitude;
    };
    std::vector<Blob> blobs;

    double value(double x, double y) const;
    std::array<double, 2> gradient(double x, double y) const;
    JetBlock jet_at(double x, double y) const;

    GrayImage render(int width, int height) const;
};

}  // namespace projinv
