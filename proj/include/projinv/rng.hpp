#pragma once

#include <cstdint>
#include <initializer_list>

namespace projinv {

/// Counter-based deterministic random stream. Every stream is identified by a
/// 64-bit key derived from a root seed and a path of sub-stream ids, so trials
/// can be split across threads without sharing state and replayed exactly.
class RngStream {
public:
    explicit RngStream(std::uint64_t key) : key_(key) {}

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static RngStream from_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
        std::uint64_t key = mix(seed);
        for (std::uint64_t id : path) key = mix(key ^ mix(id + 0x632BE59BD9B4E019ULL));
        return RngStream(key);
    }

    RngStream split(std::uint64_t id) const {
        return RngStream(mix(key_ ^ mix(id + 0xD6E8FEB86659FD93ULL)));
    }

    std::uint64_t next_u64() { return mix(key_ + 0x9E3779B97F4A7C15ULL * ++counter_); }

    /// Uniform in [0, 1), 53-bit resolution, identical on every platform.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// Uniform integer in [lo, hi] inclusive.
    int uniform_int(int lo, int hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(next_u64() % span);
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace projinv
