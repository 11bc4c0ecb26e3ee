#pragma once

#include <cstdint>

namespace satake {

/// SplitMix64. One substream per (formIndex, primeIndex): the initial state is
/// derived by mixing the master seed with both indices, so sampling is
/// reproducible regardless of which thread draws which form.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : state_(mix(seed)) {}

    static RngStream substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
        RngStream r(0);
        r.state_ = mix(mix(mix(seed) ^ (a + 0x9E3779B97F4A7C15ULL)) ^
                       (b + 0xBF58476D1CE4E5B9ULL));
        return r;
    }

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace satake
