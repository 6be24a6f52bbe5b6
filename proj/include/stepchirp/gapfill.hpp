// gapfill.hpp - autoregressive reconstruction of masked signal segments
#pragma once

#include <span>
#include <vector>

#include "stepchirp/synth.hpp"

namespace stepchirp {

/// All-pole linear prediction model in prediction form:
///   x[t] = sum_i coeffs[i-1] * x[t-i].
struct ArModel {
    int order = 0;
    std::vector<double> coeffs;
    double fit_error = 0.0;  // mean-square residual after the final stage
};

/// Burg's method: minimizes the combined forward+backward prediction error
/// stage by stage. Reflection coefficients stay within [-1, 1], so the
/// model is stable even on short records.
///
/// Requires length > 2*order; throws std::runtime_error on degenerate
/// (all-zero) data.
ArModel fit_ar(std::span<const double> data, int order);

/// [begin, end) index pairs of usable stretches inside one buffer.
using SampleRuns = std::vector<std::pair<std::size_t, std::size_t>>;

/// Burg fit over several contiguous runs of one record: the stage sums skip
/// products that would straddle a run boundary, so short dropouts between
/// runs do not bias the model while every usable sample still contributes.
ArModel fit_ar_runs(std::span<const double> data, const SampleRuns& runs,
                    int order);

/// Continues a signal `count` steps past its end using the model.
/// `history` must hold at least `order` samples; the last `order` of them
/// seed the recursion.
std::vector<double> ar_extend(const ArModel& model, std::span<const double> history,
                              std::size_t count);

/// Reconstructs every contiguous masked run of the stitched signal: an AR
/// model fitted on the valid data left of the gap predicts forward, one
/// fitted on the time-reversed right side predicts backward, and the two
/// predictions are blended with a linear crossfade across the gap. Each
/// side's fit spans all of its arrival-settled runs (segmented Burg), which
/// keeps the pole estimates sharp enough to extrapolate across a full
/// masked segment. order = 0 selects min(flank/3, 64) per gap.
/// Arrival-settling samples inside a reconstructed segment stay zero.
///
/// Throws std::runtime_error when a side holds fewer than 2*order usable
/// samples (or its run next to the gap cannot seed the recursion) or when
/// the whole signal is masked. A signal without gaps is returned unchanged.
SyntheticSignal fill_gap(const SyntheticSignal& sig, int order = 0);

}  // namespace stepchirp
