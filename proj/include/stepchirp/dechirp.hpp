// dechirp.hpp - per-subpulse de-chirped receiver model
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stepchirp/plan.hpp"
#include "stepchirp/scene.hpp"

namespace stepchirp {

/// One train of de-chirped sub-signals: n_subpulses rows of row_len samples
/// at the (low) receiver rate. Masked rows are all-zero.
struct SubSignalFrame {
    std::vector<double> samples;  // row-major, n_rows * row_len
    std::size_t row_len = 0;
    int n_rows = 0;
    double sample_rate_hz = 0.0;
    int train_index = 0;
    std::vector<std::uint8_t> row_valid;  // false = masked by interference
    // First sample of each row where every echo has arrived. Earlier samples
    // are (partially) zero because the echo window starts tau after the
    // reference window.
    std::vector<int> row_first_valid;

    std::span<double> row(int n) {
        return {samples.data() + static_cast<std::size_t>(n) * row_len, row_len};
    }
    std::span<const double> row(int n) const {
        return {samples.data() + static_cast<std::size_t>(n) * row_len, row_len};
    }
};

/// Simulates the de-chirped sub-signals of one train. Row n holds, for each
/// scatterer with delay tau (frozen at the subpulse start time),
///   a * cos(2*pi*(k*tau*u - k*tau^2/2 + f_lo_n*tau)),  u in [tau, t_cw],
/// where f_lo_n is the subpulse start frequency; samples before the echo
/// arrives are zero. Gaussian noise is added when the scene requests it.
///
/// Throws std::invalid_argument when the plan fails validation or a scatterer
/// aliases (k*tau >= sample_rate/2).
SubSignalFrame dechirp_frame(const WaveformPlan& plan, const Scene& scene,
                             int train_index, double sample_rate_hz);

struct GapApplication {
    SubSignalFrame frame;
    std::vector<int> masked;  // rows zeroed by this call
    bool no_op = false;       // spec resolved to an empty index set
};

/// Zeroes the sub-signals hit by the interference spec and updates the
/// row validity mask. An empty resolution is flagged, not an error.
GapApplication apply_gap(SubSignalFrame frame, const GapSpec& gap,
                         const WaveformPlan& plan);

}  // namespace stepchirp
