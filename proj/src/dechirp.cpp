#include "stepchirp/dechirp.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "stepchirp/rng.hpp"

namespace stepchirp {

SubSignalFrame dechirp_frame(const WaveformPlan& plan, const Scene& scene,
                             int train_index, double sample_rate_hz) {
    const PlanValidation v = validate_plan(plan);
    if (!v.ok()) {
        std::string msg = "dechirp_frame: invalid plan:";
        for (const auto& viol : v.violations) msg += " [" + viol.id + "]";
        throw std::invalid_argument(msg);
    }
    if (scene.scatterers.empty()) {
        throw std::invalid_argument("dechirp_frame: scene has no scatterers");
    }
    if (sample_rate_hz <= 0.0 || train_index < 0) {
        throw std::invalid_argument("dechirp_frame: bad sample rate or train index");
    }

    const double k = plan.chirp_rate();
    const double fs = sample_rate_hz;
    const std::size_t row_len =
        static_cast<std::size_t>(std::llround(plan.t_cw_s * fs));

    SubSignalFrame frame;
    frame.row_len = row_len;
    frame.n_rows = plan.n_subpulses;
    frame.sample_rate_hz = fs;
    frame.train_index = train_index;
    frame.samples.assign(static_cast<std::size_t>(frame.n_rows) * row_len, 0.0);
    frame.row_valid.assign(static_cast<std::size_t>(frame.n_rows), 1);
    frame.row_first_valid.assign(static_cast<std::size_t>(frame.n_rows), 0);

    const double two_pi = 2.0 * std::numbers::pi;
    for (int n = 0; n < frame.n_rows; ++n) {
        const double t_sub = train_index * plan.t_pr_s + n * plan.t_cr_s;
        const double f_lo = subpulse_band_lo(plan, n);
        auto row = frame.row(n);
        double tau_max = 0.0;

        for (std::size_t si = 0; si < scene.scatterers.size(); ++si) {
            const Scatterer& s = scene.scatterers[si];
            const double tau = scatterer_delay(scene, s, t_sub);
            const double beat = k * tau;
            if (!(beat < 0.5 * fs)) {
                throw std::invalid_argument(
                    "dechirp_frame: scatterer " + std::to_string(si) +
                    " aliases: beat " + std::to_string(beat) + " Hz >= fs/2");
            }
            tau_max = std::max(tau_max, tau);

            // Constant phase per subpulse; beat tone at k*tau.
            const double phase0 = two_pi * (f_lo * tau - 0.5 * k * tau * tau);
            const std::size_t j0 =
                static_cast<std::size_t>(std::max(0.0, std::ceil(tau * fs)));
            for (std::size_t j = j0; j < row_len; ++j) {
                const double u = static_cast<double>(j) / fs;
                if (u > plan.t_cw_s) break;
                row[j] += s.reflectivity * std::cos(two_pi * beat * u + phase0);
            }
        }
        frame.row_first_valid[static_cast<std::size_t>(n)] =
            static_cast<int>(std::ceil(tau_max * fs));
    }

    const double sigma = scene.noise_sigma();
    if (sigma > 0.0) {
        NoiseStream noise(scene.rng_seed, static_cast<std::uint64_t>(train_index));
        for (auto& x : frame.samples) x += sigma * noise.gaussian();
    }
    return frame;
}

GapApplication apply_gap(SubSignalFrame frame, const GapSpec& gap,
                         const WaveformPlan& plan) {
    GapApplication out;
    if (gap.band_hz) {
        out.masked = masked_subpulses(plan, gap.band_hz->first, gap.band_hz->second);
    } else {
        out.masked = gap.indices;
    }
    for (int n : out.masked) {
        if (n < 0 || n >= frame.n_rows) {
            throw std::invalid_argument("apply_gap: subpulse index " +
                                        std::to_string(n) + " out of range");
        }
    }
    out.no_op = out.masked.empty();
    for (int n : out.masked) {
        auto row = frame.row(n);
        std::fill(row.begin(), row.end(), 0.0);
        frame.row_valid[static_cast<std::size_t>(n)] = 0;
    }
    out.frame = std::move(frame);
    return out;
}

}  // namespace stepchirp
