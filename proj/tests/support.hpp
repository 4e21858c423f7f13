#pragma once

#include <cmath>
#include <vector>

#include "projinv/homography.hpp"
#include "projinv/jet_config.hpp"

namespace projinv::testing {

inline double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? std::abs(a - b) : std::abs(a - b) / scale;
}

/// Configuration sitting exactly on the cross-section: points (1,0), (0,0),
/// (0,1), gradient of block 1 fixed to (1,0). Remaining gradients and any
/// extra blocks are supplied by the caller.
inline JetConfiguration cross_section_config(const std::vector<std::array<double, 4>>& tail_grads_and_blocks = {
                                                 {2.0, 3.0, 0.0, 0.0},
                                                 {4.0, 5.0, 0.0, 0.0}}) {
    // tail entries: for blocks 2..3 only (p, q) are used; blocks >= 4 use all four as (x, y, p, q)
    std::vector<JetBlock> blocks;
    blocks.push_back(JetBlock{1.0, 0.0, 1.0, 0.0});
    blocks.push_back(JetBlock{0.0, 0.0, tail_grads_and_blocks[0][0], tail_grads_and_blocks[0][1]});
    blocks.push_back(JetBlock{0.0, 1.0, tail_grads_and_blocks[1][0], tail_grads_and_blocks[1][1]});
    for (std::size_t i = 2; i < tail_grads_and_blocks.size(); ++i) {
        const auto& t = tail_grads_and_blocks[i];
        blocks.push_back(JetBlock{t[0], t[1], t[2], t[3]});
    }
    return JetConfiguration(std::move(blocks));
}

inline double max_entry_rel_diff(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b) {
    const double scale = std::max({1.0, a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
    return (a - b).cwiseAbs().maxCoeff() / scale;
}

}  // namespace projinv::testing
