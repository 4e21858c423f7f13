#include "projinv/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "projinv/moving_frame.hpp"

namespace projinv {

double config_margin(const JetConfiguration& cfg) {
    double m = std::abs(delta(cfg, 1, 2, 3));
    m = std::min(m, std::abs(phi(cfg, 1, 1, 2)));
    m = std::min(m, std::abs(phi(cfg, 1, 1, 3)));
    m = std::min(m, std::abs(phi(cfg, 2, 1, 2)));
    m = std::min(m, std::abs(phi(cfg, 2, 2, 3)));
    m = std::min(m, std::abs(phi(cfg, 3, 2, 3)));
    m = std::min(m, std::abs(phi(cfg, 3, 1, 3)));
    m = std::min(m, std::abs(frame_denominator(cfg)));
    for (int k = 4; k <= cfg.size(); ++k) {
        m = std::min(m, std::abs(delta(cfg, 2, 3, k)));
        m = std::min(m, std::abs(xi_denominator(cfg, k)));
        m = std::min(m, std::abs(phi(cfg, k, 1, k) * phi(cfg, 1, 1, 2) - phi(cfg, k, 2, k)));
    }
    return m;
}

JetConfiguration sample_general_config(RngStream& rng, int n, double margin, int max_attempts) {
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<JetBlock> blocks(static_cast<std::size_t>(n));
        for (JetBlock& b : blocks) {
            b.x = rng.uniform(-1.0, 1.0);
            b.y = rng.uniform(-1.0, 1.0);
            b.p = rng.uniform(-1.0, 1.0);
            b.q = rng.uniform(-1.0, 1.0);
        }
        JetConfiguration cfg(std::move(blocks));
        if (config_margin(cfg) >= margin) return cfg;
    }
    throw SamplingExhausted("no general-position configuration after " +
                            std::to_string(max_attempts) + " attempts");
}

TrialPair sample_trial_pair(RngStream& rng, int n, double spread, double margin) {
    const JetConfiguration cfg = sample_general_config(rng, n, margin);
    constexpr int kAttempts = 200;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        Homography g = sample_homography(rng.next_u64(), spread);
        try {
            if (config_margin(act_config(g, cfg)) >= 0.1 * margin) return TrialPair{cfg, g};
        } catch (const Error&) {
            // denominator hit; resample g
        }
    }
    throw SamplingExhausted("no well-conditioned trial pair");
}

}  // namespace projinv
