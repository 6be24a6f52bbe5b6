#include "stepchirp/synth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "stepchirp/interp.hpp"

namespace stepchirp {

namespace {

constexpr double kIntegerShiftTol = 1e-6;  // samples

void check_frame(const SubSignalFrame& frame, const WaveformPlan& plan) {
    if (frame.n_rows != plan.n_subpulses || frame.row_len == 0) {
        throw std::invalid_argument("frame inconsistent with plan");
    }
    const auto want =
        static_cast<std::size_t>(std::llround(plan.t_cw_s * frame.sample_rate_hz));
    if (frame.row_len != want) {
        throw std::invalid_argument("frame row length inconsistent with plan");
    }
}

}  // namespace

SyntheticSignal stitch(const SubSignalFrame& frame, const WaveformPlan& plan) {
    check_frame(frame, plan);
    const double fs = frame.sample_rate_hz;
    const double k = plan.chirp_rate();
    const double seg_dur = plan.delta_f_hz / k;  // kept slice of each window
    if (seg_dur > plan.t_cw_s) {
        throw std::invalid_argument("stitch: delta_f/k exceeds t_cw");
    }

    const int n = frame.n_rows;
    const double seg_samples = seg_dur * fs;
    const std::size_t row_len = frame.row_len;
    const std::size_t total = static_cast<std::size_t>(
        std::llround(((n - 1) * seg_dur + plan.t_cw_s) * fs));

    SyntheticSignal out;
    out.sample_rate_hz = fs;
    out.train_index = frame.train_index;
    out.plan = plan;
    out.samples.assign(total, 0.0);
    out.gap_mask.assign(total, 0);
    out.sample_valid.assign(total, 1);
    out.segment_starts.resize(static_cast<std::size_t>(n));

    for (int seg = 0; seg < n; ++seg) {
        const double shift = seg * seg_samples;  // row-local offset of output grid
        const std::size_t g0 =
            static_cast<std::size_t>(std::llround(shift));
        const std::size_t g1 =
            (seg + 1 < n)
                ? static_cast<std::size_t>(std::llround(shift + seg_samples))
                : total;
        out.segment_starts[static_cast<std::size_t>(seg)] = g0;

        const bool masked = !frame.row_valid[static_cast<std::size_t>(seg)];
        const int first_valid = frame.row_first_valid[static_cast<std::size_t>(seg)];
        const auto row = frame.row(seg);
        const bool integer_shift =
            std::abs(shift - std::round(shift)) < kIntegerShiftTol;

        for (std::size_t g = g0; g < g1 && g < total; ++g) {
            double pos = static_cast<double>(g) - shift;
            // Sub-sample overhang at the last segment's tail from rounding.
            pos = std::min(pos, static_cast<double>(row_len - 1));
            const bool settling = pos < static_cast<double>(first_valid);
            if (settling) out.sample_valid[g] = 0;
            if (masked) {
                out.gap_mask[g] = 1;
                continue;  // stays zero
            }
            if (settling) continue;  // echo not arrived yet: exact zero
            if (integer_shift) {
                out.samples[g] = row[static_cast<std::size_t>(std::llround(pos))];
            } else {
                out.samples[g] = interp_lagrange(
                    row, pos, static_cast<std::size_t>(first_valid), row_len - 1);
            }
        }
    }
    return out;
}

double coherence_residual(const SubSignalFrame& frame, const WaveformPlan& plan,
                          int n) {
    check_frame(frame, plan);
    if (n < 1 || n >= frame.n_rows) {
        throw std::invalid_argument("coherence_residual: need 1 <= n < N");
    }
    if (!frame.row_valid[static_cast<std::size_t>(n)] ||
        !frame.row_valid[static_cast<std::size_t>(n - 1)]) {
        throw std::runtime_error("coherence_residual: row " +
                                 std::to_string(!frame.row_valid[(std::size_t)n]
                                                    ? n
                                                    : n - 1) +
                                 " is masked");
    }

    const double fs = frame.sample_rate_hz;
    const double shift = plan.delta_f_hz / plan.chirp_rate() * fs;  // samples
    const auto prev = frame.row(n - 1);
    const auto cur = frame.row(n);
    const std::size_t row_len = frame.row_len;
    const int fv_cur = frame.row_first_valid[static_cast<std::size_t>(n)];
    const int fv_prev = frame.row_first_valid[static_cast<std::size_t>(n - 1)];
    const bool integer_shift = std::abs(shift - std::round(shift)) < kIntegerShiftTol;

    // Window overlap: sample j of row n-1 against position j - shift of row n.
    const std::size_t j_begin = static_cast<std::size_t>(std::max<double>(
        std::ceil(shift + fv_cur), static_cast<double>(fv_prev)));
    if (j_begin >= row_len) {
        throw std::runtime_error("coherence_residual: empty window overlap");
    }

    double peak = 0.0;
    for (std::size_t j = static_cast<std::size_t>(fv_prev); j < row_len; ++j) {
        peak = std::max(peak, std::abs(prev[j]));
    }
    if (peak == 0.0) {
        throw std::runtime_error("coherence_residual: silent sub-signal");
    }

    double worst = 0.0;
    for (std::size_t j = j_begin; j < row_len; ++j) {
        const double pos = static_cast<double>(j) - shift;
        const double shifted =
            integer_shift
                ? cur[static_cast<std::size_t>(std::llround(pos))]
                : interp_lagrange(cur, pos, static_cast<std::size_t>(fv_cur),
                                  row_len - 1);
        worst = std::max(worst, std::abs(prev[j] - shifted));
    }
    return worst / peak;
}

}  // namespace stepchirp
