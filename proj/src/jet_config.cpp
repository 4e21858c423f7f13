#include "projinv/jet_config.hpp"

#include <algorithm>
#include <string>

namespace projinv {

namespace detail {

double det3(const double m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace detail

JetConfiguration::JetConfiguration(std::vector<JetBlock> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.size() < 3) {
        throw InvalidConfiguration("configuration needs at least 3 blocks, got " +
                                   std::to_string(blocks_.size()));
    }
    for (const JetBlock& b : blocks_) {
        if (!std::isfinite(b.x) || !std::isfinite(b.y) || !std::isfinite(b.p) || !std::isfinite(b.q)) {
            throw InvalidConfiguration("non-finite block coordinate");
        }
    }
}

const JetBlock& JetConfiguration::block(int i) const {
    if (i < 1 || i > size()) throw IndexOutOfRange("block index " + std::to_string(i) + " of n=" + std::to_string(size()));
    return blocks_[static_cast<std::size_t>(i - 1)];
}

JetBlock& JetConfiguration::block(int i) {
    if (i < 1 || i > size()) throw IndexOutOfRange("block index " + std::to_string(i) + " of n=" + std::to_string(size()));
    return blocks_[static_cast<std::size_t>(i - 1)];
}

std::vector<double> JetConfiguration::coordinates() const {
    std::vector<double> out;
    out.reserve(blocks_.size() * 4);
    for (const JetBlock& b : blocks_) {
        out.push_back(b.x);
        out.push_back(b.y);
        out.push_back(b.p);
        out.push_back(b.q);
    }
    return out;
}

JetConfiguration JetConfiguration::from_coordinates(const std::vector<double>& coords) {
    if (coords.size() % 4 != 0) throw InvalidConfiguration("coordinate vector length not a multiple of 4");
    std::vector<JetBlock> blocks(coords.size() / 4);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        blocks[i] = JetBlock{coords[4 * i], coords[4 * i + 1], coords[4 * i + 2], coords[4 * i + 3]};
    }
    return JetConfiguration(std::move(blocks));
}

double delta(const JetConfiguration& cfg, int i, int j, int k) {
    if (i == j || j == k || i == k) throw IndexOutOfRange("delta indices must be distinct");
    const JetBlock& a = cfg.block(i);
    const JetBlock& b = cfg.block(j);
    const JetBlock& c = cfg.block(k);
    return a.x * (b.y - c.y) - a.y * (b.x - c.x) + (b.x * c.y - c.x * b.y);
}

double phi(const JetConfiguration& cfg, int k, int i, int j) {
    if (i == j) throw IndexOutOfRange("phi requires i != j");
    const JetBlock& a = cfg.block(i);
    const JetBlock& b = cfg.block(j);
    const JetBlock& g = cfg.block(k);
    return (a.x - b.x) * g.p + (a.y - b.y) * g.q;
}

double diameter(const JetConfiguration& cfg) {
    double d2 = 0.0;
    const auto& blocks = cfg.blocks();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            const double dx = blocks[i].x - blocks[j].x;
            const double dy = blocks[i].y - blocks[j].y;
            d2 = std::max(d2, dx * dx + dy * dy);
        }
    }
    return std::sqrt(d2);
}

double xi_denominator(const JetConfiguration& cfg, int k) {
    return delta(cfg, 2, 3, k) + delta(cfg, 1, 2, 3) * phi(cfg, 1, 1, k);
}

GeneralPositionReport check_general_position(const JetConfiguration& cfg, double eps_gp) {
    GeneralPositionReport report;
    const double d = std::max(diameter(cfg), std::numeric_limits<double>::min());
    const JetBlock& b1 = cfg.block(1);
    const double g1 = std::max(std::hypot(b1.p, b1.q), std::numeric_limits<double>::min());

    report.min_abs_delta123 = std::abs(delta(cfg, 1, 2, 3)) / (d * d);
    report.min_abs_phi =
        std::min(std::abs(phi(cfg, 1, 1, 2)), std::abs(phi(cfg, 1, 1, 3))) / (d * g1);
    for (int k = 4; k <= cfg.size(); ++k) {
        const double scaled = std::abs(xi_denominator(cfg, k)) / (d * d * (1.0 + d * g1));
        report.min_abs_xi_denominator = std::min(report.min_abs_xi_denominator, scaled);
    }
    report.passes = report.min_abs_delta123 > eps_gp && report.min_abs_phi > eps_gp &&
                    report.min_abs_xi_denominator > eps_gp;
    return report;
}

}  // namespace projinv
