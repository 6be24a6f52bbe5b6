// plan.hpp - frequency-stepped chirp waveform plan and derived quantities
#pragma once

#include <string>
#include <vector>

namespace stepchirp {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

/// All timing and frequency parameters of one frequency-stepped chirp train.
/// Validated plans are treated as immutable value objects; every downstream
/// stage takes the plan by const reference.
struct WaveformPlan {
    double f_start_hz = 0.0;   // seed chirp start frequency
    double b_chirp_hz = 0.0;   // per-subpulse sweep bandwidth
    double t_cw_s = 0.0;       // chirp pulse width
    double t_cr_s = 0.0;       // chirp repetition period (= loop time)
    double t_loop_s = 0.0;     // frequency-shifting loop circulation time
    double t_pr_s = 0.0;       // seed pulse train period
    double t_pw_s = 0.0;       // seed pulse width
    double delta_f_hz = 0.0;   // per-loop carrier step
    double f_offset_hz = 0.0;  // fixed shift added to every carrier
    double b_obpf_hz = 0.0;    // loop filter bandwidth
    int n_subpulses = 0;       // subpulses used per train

    double chirp_rate() const { return b_chirp_hz / t_cw_s; }  // Hz/s
    double f_center_hz() const { return f_start_hz + 0.5 * b_chirp_hz; }

    /// Same plan with a different number of subpulses in use.
    WaveformPlan with_subpulses(int n) const {
        WaveformPlan p = *this;
        p.n_subpulses = n;
        return p;
    }
};

/// Largest subpulse count the loop filter supports: floor(b_obpf/delta_f) + 1.
int max_subpulse_count(double b_obpf_hz, double delta_f_hz);

/// Carrier (center frequency) of subpulse n; the subpulse sweeps
/// carrier +- b_chirp/2.
double subpulse_carrier(const WaveformPlan& plan, int n);

/// Lower/upper edge of the band swept by subpulse n.
double subpulse_band_lo(const WaveformPlan& plan, int n);
double subpulse_band_hi(const WaveformPlan& plan, int n);

/// Bandwidth of the synthesized signal: (N-1)*delta_f + b_chirp.
double equivalent_bandwidth(const WaveformPlan& plan);

/// c / (2B).
double theoretical_resolution(double bandwidth_hz);

/// Full band covered by the train: [band_lo(0), band_hi(N-1)].
struct BandSpan {
    double lo_hz;
    double hi_hz;
    double center_hz() const { return 0.5 * (lo_hz + hi_hz); }
};
BandSpan synthesized_band(const WaveformPlan& plan);

/// One violated plan constraint. `id` is a stable machine-readable name.
struct PlanViolation {
    std::string id;
    std::string message;
};

struct PlanValidation {
    std::vector<PlanViolation> violations;
    int m_ratio = 0;  // t_pr / t_cr when divisible
    int n_max = 0;
    bool ok() const { return violations.empty(); }
    bool has(const std::string& id) const;
};

/// Checks every plan invariant. Violations are data, not exceptions.
/// The t_pr = M*t_cr divisibility test uses a 1e-9 relative tolerance.
PlanValidation validate_plan(const WaveformPlan& plan);

/// Subpulses to discard for an interference band: those whose carrier falls
/// inside [band_lo, band_hi]. A subpulse whose band is merely clipped at the
/// edge keeps most of its sweep and is retained.
std::vector<int> masked_subpulses(const WaveformPlan& plan, double band_lo_hz,
                                  double band_hi_hz);

}  // namespace stepchirp
