#include "projinv/moving_frame.hpp"

#include <cmath>
#include <string>

namespace projinv {

Homography FrameParameters::assemble() const {
    Eigen::Matrix3d m;
    m << a1, a2, a3, b1, b2, b3, c1, c2, 1.0;
    return Homography(m);
}

double frame_denominator(const JetConfiguration& cfg) {
    const JetBlock& b1 = cfg.block(1);
    const JetBlock& b2 = cfg.block(2);
    const JetBlock& b3 = cfg.block(3);
    const double d = delta(cfg, 1, 2, 3);
    return d * (b1.q * b1.y + b1.p * b1.x) + b2.x * b3.y - b3.x * b2.y;
}

FrameParameters solve_frame(const JetConfiguration& cfg, const FrameOptions& opts) {
    const GeneralPositionReport gp = check_general_position(cfg, opts.eps_gp);
    if (!(gp.min_abs_delta123 > opts.eps_gp) || !(gp.min_abs_phi > opts.eps_gp)) {
        throw NotInGeneralPosition("degenerate base triangle or gradient 1");
    }

    const JetBlock& p1 = cfg.block(1);
    const JetBlock& p2 = cfg.block(2);
    const JetBlock& p3 = cfg.block(3);

    const double d = delta(cfg, 1, 2, 3);
    const double denom = frame_denominator(cfg);
    const double dia = std::max(diameter(cfg), std::numeric_limits<double>::min());
    const double g1 = std::hypot(p1.p, p1.q);
    if (std::abs(denom) <= 1e-10 * dia * dia * (1.0 + dia * g1)) {
        throw FrameDenominatorNearZero("frame denominator " + std::to_string(denom));
    }

    const double phi13 = phi(cfg, 1, 1, 3);

    FrameParameters out;
    // a-row: the line through points 2 and 3, scaled so point 1 maps to x = 1.
    out.a1 = (p2.y - p3.y) / denom;
    out.a2 = (p3.x - p2.x) / denom;
    out.a3 = (p2.x * p3.y - p3.x * p2.y) / denom;
    // b-row: the line through points 1 and 2, scaled so point 3 maps to y = 1.
    out.b1 = phi13 * (p1.y - p2.y) / denom;
    out.b2 = phi13 * (p2.x - p1.x) / denom;
    out.b3 = phi13 * (p1.x * p2.y - p2.x * p1.y) / denom;
    // c-row: pins the gradient of block 1 to (1, 0).
    out.c1 = (p2.y - p3.y - p1.p * d) / denom;
    out.c2 = (p3.x - p2.x - p1.q * d) / denom;
    return out;
}

std::array<double, 8> frame_residuals(const JetConfiguration& cfg, const FrameParameters& params) {
    const JetConfiguration mapped = act_config(params.assemble(), cfg);
    const JetBlock& m1 = mapped.block(1);
    const JetBlock& m2 = mapped.block(2);
    const JetBlock& m3 = mapped.block(3);
    return {m1.x - 1.0, m1.y, m1.p - 1.0, m1.q, m2.x, m2.y, m3.x, m3.y - 1.0};
}

std::vector<double> NormalizedConfiguration::free_coordinates() const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(4 * cfg.size() - 8));
    out.push_back(cfg.block(2).p);
    out.push_back(cfg.block(2).q);
    out.push_back(cfg.block(3).p);
    out.push_back(cfg.block(3).q);
    for (int k = 4; k <= cfg.size(); ++k) {
        const JetBlock& b = cfg.block(k);
        out.push_back(b.x);
        out.push_back(b.y);
        out.push_back(b.p);
        out.push_back(b.q);
    }
    return out;
}

double NormalizedConfiguration::max_pin_residual() const {
    const JetBlock& b1 = cfg.block(1);
    const JetBlock& b2 = cfg.block(2);
    const JetBlock& b3 = cfg.block(3);
    double r = 0.0;
    for (double v : {b1.x - 1.0, b1.y, b1.p - 1.0, b1.q, b2.x, b2.y, b3.x, b3.y - 1.0}) {
        r = std::max(r, std::abs(v));
    }
    return r;
}

NormalizedConfiguration normalize(const JetConfiguration& cfg, const FrameOptions& opts) {
    const FrameParameters params = solve_frame(cfg, opts);
    return NormalizedConfiguration{act_config(params.assemble(), cfg), params};
}

double invariantize(const std::function<double(const JetConfiguration&)>& f,
                    const JetConfiguration& cfg, const FrameOptions& opts) {
    const double value = f(normalize(cfg, opts).cfg);
    if (!std::isfinite(value)) throw EvaluationFailure("function undefined at normalized point");
    return value;
}

}  // namespace projinv
