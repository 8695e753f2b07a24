#pragma once

#include <cmath>
#include <cstdint>

namespace lpemb {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// xoshiro256++ keyed by (seed, stream_id).  Every stream is an independent,
/// order-insensitive generator: drawing from stream 3 never perturbs stream 7,
/// and re-creating a stream replays it bit for bit on any platform.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id) {
        std::uint64_t mix = seed;
        (void)splitmix64(mix);
        mix ^= 0xd1b54a32d192ed03ULL * (stream_id + 1);
        for (auto& word : state_) word = splitmix64(mix);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform on the open interval (0,1); never returns an endpoint, so
    /// log() and tan() of affine images stay finite.
    double next_unit_open() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Uniform on (-1,1).
    double next_symmetric() { return 2.0 * next_unit_open() - 1.0; }

    /// Standard normal via Box-Muller; two uniforms per pair, spare cached.
    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double radius = std::sqrt(-2.0 * std::log(next_unit_open()));
        const double angle = 2.0 * pi * next_unit_open();
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    /// Uniform integer in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

    static constexpr double pi = 3.14159265358979323846;

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace lpemb
