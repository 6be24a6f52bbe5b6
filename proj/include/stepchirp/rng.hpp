// rng.hpp - deterministic per-stream Gaussian noise source
#pragma once

#include <cstdint>

namespace stepchirp {

/// Counter-based Gaussian generator. Streams derived from (seed, stream_id)
/// are independent and reproducible bit-for-bit on any platform, which keeps
/// multi-threaded simulations deterministic: each pulse train draws from its
/// own stream regardless of scheduling order.
class NoiseStream {
public:
    NoiseStream(std::uint64_t seed, std::uint64_t stream_id);

    /// Standard normal deviate (Box-Muller).
    double gaussian();

private:
    std::uint64_t next_u64();

    std::uint64_t state_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace stepchirp
