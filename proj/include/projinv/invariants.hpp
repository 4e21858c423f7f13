#pragma once

#include <array>
#include <vector>

#include "projinv/jet_config.hpp"

namespace projinv {

/// The four generators of the three-point invariant field:
///   zeta12 = Phi^(1)_12 Phi^(2)_12,  zeta23 = Phi^(2)_23 Phi^(3)_23,
///   zeta13 = Phi^(1)_13 Phi^(3)_13,  tau    = Phi^(1)_13 Phi^(3)_23 Phi^(2)_12.
struct ZetaBasis {
    double zeta12 = 0.0;
    double zeta23 = 0.0;
    double zeta13 = 0.0;
    double tau = 0.0;
};

ZetaBasis basis_n3(const JetConfiguration& cfg);

/// Closed-form coordinates of the normalized configuration. These agree
/// entrywise with the free coordinates of normalize(cfg); the uniform formula
/// for block k uses the per-point frame denominator w_k = xi_denominator(k).
struct IotaCoordinates {
    struct Block {
        double x = 0.0, y = 0.0, p = 0.0, q = 0.0;
    };
    double p2 = 0.0, q2 = 0.0, p3 = 0.0, q3 = 0.0;
    std::vector<Block> higher;  // blocks 4..n

    std::vector<double> as_vector() const;  // same order as free_coordinates()
};

IotaCoordinates iota_coordinates(const JetConfiguration& cfg);

/// Fundamental invariants of block k >= 4. xi1, xi2 are the position pair,
/// xi3 equals the normalized p-coordinate of block k and xi4 the ratio of the
/// normalized q- and p-coordinates.
std::array<double, 4> xi_block(const JetConfiguration& cfg, int k);

/// The generating set G_n: (zeta12, zeta23, zeta13, tau) followed by one
/// xi-block per k = 4..n; 4n-8 values in total.
struct InvariantVector {
    ZetaBasis zeta;
    std::vector<std::array<double, 4>> xi_blocks;

    std::size_t size() const { return 4 + 4 * xi_blocks.size(); }
    std::vector<double> as_vector() const;
};

InvariantVector generating_set(const JetConfiguration& cfg);

/// Product of the gradient-moment determinant and the point determinant of
/// blocks 1..3. Equal to tau - zeta12 zeta13 zeta23 / tau.
double tau_prime(const JetConfiguration& cfg);

}  // namespace projinv
