#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>

#include "projinv/jet_config.hpp"

namespace projinv {

/// Element of PGL(3, R) stored as its canonical representative: the matrix is
/// rescaled so that the bottom-right entry equals exactly 1. Matrices with a
/// vanishing bottom-right entry have no such representative and are rejected.
class Homography {
public:
    explicit Homography(const Eigen::Matrix3d& any_representative);

    static Homography identity() { return Homography(Eigen::Matrix3d::Identity()); }

    const Eigen::Matrix3d& matrix() const { return m_; }
    double det() const { return det_; }

    double c1() const { return m_(2, 0); }
    double c2() const { return m_(2, 1); }

    /// Projective denominator s = c1 x + c2 y + 1 at a point.
    double denom_at(double x, double y) const { return c1() * x + c2() * y + 1.0; }

    Homography compose(const Homography& rhs) const { return Homography(m_ * rhs.m_); }
    Homography inverse() const { return Homography(m_.inverse().eval()); }

private:
    Eigen::Matrix3d m_;
    double det_ = 0.0;
};

inline Homography operator*(const Homography& a, const Homography& b) { return a.compose(b); }

/// Tolerance below which a projective denominator counts as vanishing.
double denominator_floor(const Homography& g, double x, double y);

std::array<double, 2> act_point(const Homography& g, std::array<double, 2> pt);

/// First prolongation of the point action: maps (x, y, p, q) to the jet of
/// the transported scalar field at the image point. The gradient covector
/// (p, q, -(px+qy)) transforms by the cofactor rows of the matrix.
JetBlock prolong_block(const Homography& g, const JetBlock& blk);

JetConfiguration act_config(const Homography& g, const JetConfiguration& cfg);

/// Joint Jacobian multiplier J(g, x) = det^n / prod_i s_i^3 where det and the
/// s_i are taken from the canonical representative.
double jacobian_multiplier(const Homography& g, const JetConfiguration& cfg);

/// Identity plus an entrywise uniform perturbation in [-spread, spread],
/// canonicalized; resampled until the determinant and the denominators over
/// the test box stay away from zero. Deterministic per seed.
Homography sample_homography(std::uint64_t rng_seed, double spread);

}  // namespace projinv
