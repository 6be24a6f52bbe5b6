#include "stepchirp/rng.hpp"

#include <cmath>
#include <numbers>

namespace stepchirp {

namespace {

// splitmix64 step; full-period 64-bit mixer.
std::uint64_t mix(std::uint64_t& s) {
    s += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

NoiseStream::NoiseStream(std::uint64_t seed, std::uint64_t stream_id) {
    // Fold the stream id into the seed so streams never overlap.
    std::uint64_t s = seed;
    std::uint64_t a = mix(s);
    s = a ^ (stream_id * 0xD1342543DE82EF95ull + 0x2545F4914F6CDD1Dull);
    (void)mix(s);
    state_ = s;
}

std::uint64_t NoiseStream::next_u64() { return mix(state_); }

double NoiseStream::gaussian() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    // u1 in (0,1], u2 in [0,1).
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(th);
    has_cached_ = true;
    return r * std::cos(th);
}

}  // namespace stepchirp
