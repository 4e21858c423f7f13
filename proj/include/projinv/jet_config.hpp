#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "projinv/errors.hpp"

namespace projinv {

/// One point of the plane together with the first derivatives of a scalar
/// field at that point: (x, y, p, q) with p = du/dx, q = du/dy.
struct JetBlock {
    double x = 0.0;
    double y = 0.0;
    double p = 0.0;
    double q = 0.0;
};

/// Ordered configuration of n >= 3 jet blocks. Block indices are 1-based in
/// the public API to match the usual configuration-space notation.
class JetConfiguration {
public:
    JetConfiguration() = default;
    explicit JetConfiguration(std::vector<JetBlock> blocks);

    int size() const { return static_cast<int>(blocks_.size()); }

    const JetBlock& block(int i) const;  // 1-based
    JetBlock& block(int i);              // 1-based

    const std::vector<JetBlock>& blocks() const { return blocks_; }

    /// Flattened coordinates (x1, y1, p1, q1, x2, ...), length 4n.
    std::vector<double> coordinates() const;
    static JetConfiguration from_coordinates(const std::vector<double>& coords);

private:
    std::vector<JetBlock> blocks_;
};

/// delta_{i,j,k}: determinant of the 3x3 matrix with columns (x, y, 1) of the
/// three indexed points. Alternating in (i, j, k); zero iff collinear.
double delta(const JetConfiguration& cfg, int i, int j, int k);

/// Phi^{(k)}_{ij} = (x_i - x_j) p_k + (y_i - y_j) q_k, i != j.
double phi(const JetConfiguration& cfg, int k, int i, int j);

/// Largest pairwise point distance (0 for coincident configurations).
double diameter(const JetConfiguration& cfg);

/// delta_{2,3,k} + delta_{1,2,3} * Phi^{(1)}_{1,k}. This is the common
/// denominator of the normalized coordinates of block k; it equals the frame
/// element's projective denominator at point k up to one global factor.
double xi_denominator(const JetConfiguration& cfg, int k);

struct GeneralPositionReport {
    double min_abs_delta123 = 0.0;
    double min_abs_phi = 0.0;  // over Phi^(1)_{12}, Phi^(1)_{13}
    double min_abs_xi_denominator = std::numeric_limits<double>::infinity();  // over k >= 4
    bool passes = false;
};

inline constexpr double kDefaultEpsGp = 1e-8;

/// Scale-free nondegeneracy report: the three minima are rescaled by the
/// configuration diameter and the gradient magnitude of block 1 before the
/// eps_gp comparison.
GeneralPositionReport check_general_position(const JetConfiguration& cfg, double eps_gp = kDefaultEpsGp);

namespace detail {
double det3(const double m[3][3]);
}

}  // namespace projinv
