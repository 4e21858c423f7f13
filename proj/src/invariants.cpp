#include "projinv/invariants.hpp"

#include <cmath>
#include <string>

namespace projinv {

namespace {

struct BaseBrackets {
    double d123;
    double phi12;
    double phi13;
};

BaseBrackets base_brackets(const JetConfiguration& cfg) {
    BaseBrackets b{delta(cfg, 1, 2, 3), phi(cfg, 1, 1, 2), phi(cfg, 1, 1, 3)};
    if (b.d123 == 0.0 || b.phi12 == 0.0 || b.phi13 == 0.0) {
        throw NotInGeneralPosition("vanishing delta_123 or Phi^(1) bracket");
    }
    return b;
}

double checked(double v, const char* what) {
    if (!std::isfinite(v)) throw DenominatorNearZero(what);
    return v;
}

/// delta with the alternating convention extended to repeated indices.
double delta_or_zero(const JetConfiguration& cfg, int i, int j, int k) {
    if (i == j || j == k || i == k) return 0.0;
    return delta(cfg, i, j, k);
}

/// Normalized coordinates of block k >= 2 via the per-point frame
/// denominators: s_k of the frame element is proportional to
/// w_k = delta_{23k} + delta_{123} Phi^(1)_{1k} (which degenerates to
/// delta Phi^(1)_{1k} for k = 2, 3 since delta_{23k} vanishes there).
IotaCoordinates::Block iota_block(const JetConfiguration& cfg, const BaseBrackets& b, int k) {
    const double wk = delta_or_zero(cfg, 2, 3, k) + b.d123 * phi(cfg, 1, 1, k);
    if (wk == 0.0) throw DenominatorNearZero("w_" + std::to_string(k) + " vanishes");
    const double phi_k1k = phi(cfg, k, 1, k);
    const double phi_k2k = (k == 2) ? 0.0 : phi(cfg, k, 2, k);
    const double phi_k3k = (k == 3) ? 0.0 : phi(cfg, k, 3, k);

    IotaCoordinates::Block out;
    out.x = checked(delta_or_zero(cfg, k, 2, 3) / wk, "iota x");
    out.y = checked(delta_or_zero(cfg, k, 1, 2) * b.phi13 / wk, "iota y");
    out.p = checked(wk * (phi_k1k * b.phi12 - phi_k2k) / (b.d123 * b.phi12), "iota p");
    out.q = checked(wk * (phi_k3k * b.phi12 - phi_k2k * b.phi13) / (b.d123 * b.phi12 * b.phi13),
                    "iota q");
    return out;
}

}  // namespace

ZetaBasis basis_n3(const JetConfiguration& cfg) {
    ZetaBasis z;
    z.zeta12 = phi(cfg, 1, 1, 2) * phi(cfg, 2, 1, 2);
    z.zeta23 = phi(cfg, 2, 2, 3) * phi(cfg, 3, 2, 3);
    z.zeta13 = phi(cfg, 1, 1, 3) * phi(cfg, 3, 1, 3);
    z.tau = phi(cfg, 1, 1, 3) * phi(cfg, 3, 2, 3) * phi(cfg, 2, 1, 2);
    return z;
}

std::vector<double> IotaCoordinates::as_vector() const {
    std::vector<double> out{p2, q2, p3, q3};
    out.reserve(4 + 4 * higher.size());
    for (const Block& blk : higher) {
        out.push_back(blk.x);
        out.push_back(blk.y);
        out.push_back(blk.p);
        out.push_back(blk.q);
    }
    return out;
}

IotaCoordinates iota_coordinates(const JetConfiguration& cfg) {
    const BaseBrackets b = base_brackets(cfg);

    IotaCoordinates out;
    const IotaCoordinates::Block blk2 = iota_block(cfg, b, 2);
    const IotaCoordinates::Block blk3 = iota_block(cfg, b, 3);
    out.p2 = blk2.p;
    out.q2 = blk2.q;
    out.p3 = blk3.p;
    out.q3 = blk3.q;
    out.higher.reserve(static_cast<std::size_t>(std::max(0, cfg.size() - 3)));
    for (int k = 4; k <= cfg.size(); ++k) out.higher.push_back(iota_block(cfg, b, k));
    return out;
}

std::array<double, 4> xi_block(const JetConfiguration& cfg, int k) {
    if (k < 4 || k > cfg.size()) throw IndexOutOfRange("xi block index " + std::to_string(k));
    const BaseBrackets b = base_brackets(cfg);
    const JetBlock& b1 = cfg.block(1);
    const JetBlock& bk = cfg.block(k);

    const double d23k = delta(cfg, 2, 3, k);
    if (d23k == 0.0) throw DenominatorNearZero("delta_23k vanishes");
    const double d12k = delta(cfg, 1, 2, k);
    const double phi_11k = phi(cfg, 1, 1, k);
    const double wk = d23k + b.d123 * phi_11k;
    const double t = phi(cfg, k, 1, k) * b.phi12 - phi(cfg, k, 2, k);
    if (t == 0.0) throw DenominatorNearZero("xi3 numerator factor vanishes");
    const double cross = b1.p * bk.q - bk.p * b1.q;

    std::array<double, 4> out;
    out[0] = checked(b.d123 * phi_11k / d23k, "xi1");
    out[1] = checked(d12k * b.phi13 / d23k, "xi2");
    out[2] = checked(wk * t / (b.d123 * b.phi12), "xi3");
    out[3] = checked(-(phi_11k * phi(cfg, k, 2, 3) + d23k * cross) / (b.phi13 * t), "xi4");
    return out;
}

std::vector<double> InvariantVector::as_vector() const {
    std::vector<double> out{zeta.zeta12, zeta.zeta23, zeta.zeta13, zeta.tau};
    out.reserve(size());
    for (const auto& blk : xi_blocks) out.insert(out.end(), blk.begin(), blk.end());
    return out;
}

InvariantVector generating_set(const JetConfiguration& cfg) {
    if (!check_general_position(cfg).passes) {
        throw NotInGeneralPosition("generating set needs a general-position configuration");
    }
    InvariantVector out;
    out.zeta = basis_n3(cfg);
    out.xi_blocks.reserve(static_cast<std::size_t>(std::max(0, cfg.size() - 3)));
    for (int k = 4; k <= cfg.size(); ++k) out.xi_blocks.push_back(xi_block(cfg, k));
    return out;
}

double tau_prime(const JetConfiguration& cfg) {
    const JetBlock& b1 = cfg.block(1);
    const JetBlock& b2 = cfg.block(2);
    const JetBlock& b3 = cfg.block(3);
    const double grad[3][3] = {
        {b1.p, b1.q, b1.p * b1.x + b1.q * b1.y},
        {b2.p, b2.q, b2.p * b2.x + b2.q * b2.y},
        {b3.p, b3.q, b3.p * b3.x + b3.q * b3.y},
    };
    const double pts[3][3] = {
        {b1.x, b1.y, 1.0},
        {b2.x, b2.y, 1.0},
        {b3.x, b3.y, 1.0},
    };
    return detail::det3(grad) * detail::det3(pts);
}

}  // namespace projinv
