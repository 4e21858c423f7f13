#include "projinv/homography.hpp"

#include <cmath>
#include <string>

#include "projinv/rng.hpp"

namespace projinv {

Homography::Homography(const Eigen::Matrix3d& any_representative) {
    const Eigen::Matrix3d& t = any_representative;
    if (!t.allFinite()) throw NonCanonicalMatrix("non-finite matrix entries");
    const double c3 = t(2, 2);
    const double scale = t.cwiseAbs().maxCoeff();
    if (std::abs(c3) <= 1e-14 * scale) {
        throw NonCanonicalMatrix("bottom-right entry vanishes, no c3=1 representative");
    }
    m_ = t / c3;
    m_(2, 2) = 1.0;
    det_ = m_.determinant();
    const double norm = m_.cwiseAbs().maxCoeff();
    if (!std::isfinite(det_) || std::abs(det_) <= 1e-14 * norm * norm * norm) {
        throw SingularMatrix("determinant too small: " + std::to_string(det_));
    }
}

double denominator_floor(const Homography& g, double x, double y) {
    const double coord = std::max({1.0, std::abs(x), std::abs(y)});
    return 1e-10 * (1.0 + std::abs(g.c1()) + std::abs(g.c2())) * coord;
}

std::array<double, 2> act_point(const Homography& g, std::array<double, 2> pt) {
    const Eigen::Matrix3d& t = g.matrix();
    const double s = g.denom_at(pt[0], pt[1]);
    if (std::abs(s) <= denominator_floor(g, pt[0], pt[1])) {
        throw DenominatorNearZero("point denominator " + std::to_string(s));
    }
    const double xn = t(0, 0) * pt[0] + t(0, 1) * pt[1] + t(0, 2);
    const double yn = t(1, 0) * pt[0] + t(1, 1) * pt[1] + t(1, 2);
    return {xn / s, yn / s};
}

JetBlock prolong_block(const Homography& g, const JetBlock& blk) {
    const Eigen::Matrix3d& t = g.matrix();
    const double s = g.denom_at(blk.x, blk.y);
    if (std::abs(s) <= denominator_floor(g, blk.x, blk.y)) {
        throw DenominatorNearZero("jet denominator " + std::to_string(s));
    }
    const double a1 = t(0, 0), a2 = t(0, 1), a3 = t(0, 2);
    const double b1 = t(1, 0), b2 = t(1, 1), b3 = t(1, 2);
    const double c1 = t(2, 0), c2 = t(2, 1), c3 = t(2, 2);

    // Cofactor rows of t; the gradient covector transforms by these.
    const double C11 = b2 * c3 - b3 * c2;
    const double C12 = -(b1 * c3 - b3 * c1);
    const double C13 = b1 * c2 - b2 * c1;
    const double C21 = -(a2 * c3 - a3 * c2);
    const double C22 = a1 * c3 - a3 * c1;
    const double C23 = -(a1 * c2 - a2 * c1);

    const double r = blk.p * blk.x + blk.q * blk.y;
    const double factor = s / g.det();

    JetBlock out;
    out.x = (a1 * blk.x + a2 * blk.y + a3) / s;
    out.y = (b1 * blk.x + b2 * blk.y + b3) / s;
    out.p = factor * (C11 * blk.p + C12 * blk.q - C13 * r);
    out.q = factor * (C21 * blk.p + C22 * blk.q - C23 * r);
    return out;
}

JetConfiguration act_config(const Homography& g, const JetConfiguration& cfg) {
    std::vector<JetBlock> blocks;
    blocks.reserve(static_cast<std::size_t>(cfg.size()));
    for (const JetBlock& b : cfg.blocks()) blocks.push_back(prolong_block(g, b));
    return JetConfiguration(std::move(blocks));
}

double jacobian_multiplier(const Homography& g, const JetConfiguration& cfg) {
    double denom = 1.0;
    for (const JetBlock& b : cfg.blocks()) {
        const double s = g.denom_at(b.x, b.y);
        if (std::abs(s) <= denominator_floor(g, b.x, b.y)) {
            throw DenominatorNearZero("jacobian denominator " + std::to_string(s));
        }
        denom *= s * s * s;
    }
    return std::pow(g.det(), cfg.size()) / denom;
}

Homography sample_homography(std::uint64_t rng_seed, double spread) {
    if (spread < 0.0 || !std::isfinite(spread)) throw InvalidConfiguration("spread must be nonnegative");
    if (spread == 0.0) return Homography::identity();

    RngStream rng = RngStream::from_seed(rng_seed, {0x486F6D6FULL});
    constexpr int kBudget = 1000;
    constexpr double kBoxHalfWidth = 1.6;  // denominators must stay sane on the test box
    for (int attempt = 0; attempt < kBudget; ++attempt) {
        Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) m(r, c) += rng.uniform(-spread, spread);
        }
        if (std::abs(m(2, 2)) < 0.5) continue;
        if (std::abs(m.determinant()) <= 1e-3 * std::abs(m(2, 2) * m(2, 2) * m(2, 2))) continue;
        Homography g(m);
        if (std::abs(g.det()) <= 1e-3) continue;
        bool denominators_ok = true;
        for (double sx : {-kBoxHalfWidth, kBoxHalfWidth}) {
            for (double sy : {-kBoxHalfWidth, kBoxHalfWidth}) {
                if (g.denom_at(sx, sy) < 0.15) denominators_ok = false;
            }
        }
        if (!denominators_ok) continue;
        return g;
    }
    throw SamplingExhausted("no acceptable homography after " + std::to_string(kBudget) +
                            " attempts at spread " + std::to_string(spread));
}

}  // namespace projinv
