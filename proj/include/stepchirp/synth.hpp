// synth.hpp - time-shift bandwidth synthesis of de-chirped sub-signals
#pragma once

#include <cstdint>
#include <vector>

#include "stepchirp/dechirp.hpp"
#include "stepchirp/plan.hpp"

namespace stepchirp {

/// One stitched wideband-equivalent de-chirped time series per train.
struct SyntheticSignal {
    std::vector<double> samples;
    double sample_rate_hz = 0.0;
    int train_index = 0;
    WaveformPlan plan;
    std::vector<std::size_t> segment_starts;  // one entry per subpulse
    std::vector<std::uint8_t> gap_mask;       // true: data from a masked row
    // False on the few samples at each segment start where the echoes had not
    // yet arrived (always zero there); gap filling leaves them zero.
    std::vector<std::uint8_t> sample_valid;
};

/// Stitches the N sub-signals into one series of duration
/// (N-1)*delta_f/k + t_cw. Sub-signal n, time-shifted by n*(t_cr - delta_f/k),
/// contributes the segment [n*delta_f/k, (n+1)*delta_f/k); the last one
/// contributes its whole remaining window. Shifts that are an integer number
/// of samples (the reference configuration) are spliced exactly; fractional
/// shifts are interpolated (see interp.hpp for the error bound).
SyntheticSignal stitch(const SubSignalFrame& frame, const WaveformPlan& plan);

/// Largest absolute difference between sub-signal n shifted by
/// (t_cr - delta_f/k) and sub-signal n-1 over the overlap of their windows,
/// normalized by the peak amplitude. Zero in exact arithmetic for a single
/// scatterer: the shifted sub-signals are segments of one common tone.
double coherence_residual(const SubSignalFrame& frame, const WaveformPlan& plan,
                          int n);

}  // namespace stepchirp
