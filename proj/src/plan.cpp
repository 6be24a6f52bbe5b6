#include "stepchirp/plan.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stepchirp {

int max_subpulse_count(double b_obpf_hz, double delta_f_hz) {
    if (b_obpf_hz <= 0.0 || delta_f_hz <= 0.0) {
        throw std::invalid_argument("max_subpulse_count: inputs must be positive");
    }
    return static_cast<int>(std::floor(b_obpf_hz / delta_f_hz)) + 1;
}

double subpulse_carrier(const WaveformPlan& plan, int n) {
    if (n < 0 || n >= plan.n_subpulses) {
        throw std::out_of_range("subpulse_carrier: index out of range");
    }
    return plan.f_center_hz() + (n + 1) * plan.delta_f_hz + plan.f_offset_hz;
}

double subpulse_band_lo(const WaveformPlan& plan, int n) {
    return subpulse_carrier(plan, n) - 0.5 * plan.b_chirp_hz;
}

double subpulse_band_hi(const WaveformPlan& plan, int n) {
    return subpulse_carrier(plan, n) + 0.5 * plan.b_chirp_hz;
}

double equivalent_bandwidth(const WaveformPlan& plan) {
    return (plan.n_subpulses - 1) * plan.delta_f_hz + plan.b_chirp_hz;
}

double theoretical_resolution(double bandwidth_hz) {
    if (bandwidth_hz <= 0.0) {
        throw std::invalid_argument("theoretical_resolution: bandwidth must be positive");
    }
    return kSpeedOfLight / (2.0 * bandwidth_hz);
}

BandSpan synthesized_band(const WaveformPlan& plan) {
    return {subpulse_band_lo(plan, 0), subpulse_band_hi(plan, plan.n_subpulses - 1)};
}

bool PlanValidation::has(const std::string& id) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const PlanViolation& v) { return v.id == id; });
}

PlanValidation validate_plan(const WaveformPlan& plan) {
    PlanValidation r;
    auto violate = [&](const char* id, const std::string& msg) {
        r.violations.push_back({id, msg});
    };

    const bool positive =
        plan.f_start_hz > 0.0 && plan.b_chirp_hz > 0.0 && plan.t_cw_s > 0.0 &&
        plan.t_cr_s > 0.0 && plan.t_loop_s > 0.0 && plan.t_pr_s > 0.0 &&
        plan.t_pw_s > 0.0 && plan.delta_f_hz > 0.0 && plan.b_obpf_hz > 0.0 &&
        plan.f_offset_hz >= 0.0;
    if (!positive) {
        violate("positive", "all durations and frequencies must be strictly positive");
        return r;  // further checks would divide by the offending values
    }

    if (!(plan.delta_f_hz < plan.b_chirp_hz)) {
        violate("delta_f_lt_b_chirp", "delta_f must be smaller than b_chirp");
    }
    if (!(plan.t_pw_s >= plan.t_cw_s)) {
        violate("t_pw_ge_t_cw", "seed pulse width must cover the chirp width");
    }
    if (!(plan.t_loop_s >= plan.t_pw_s)) {
        violate("t_loop_ge_t_pw", "loop time must cover the seed pulse width");
    }

    const double rel_tol = 1e-9;
    if (std::abs(plan.t_cr_s - plan.t_loop_s) > rel_tol * plan.t_cr_s) {
        violate("t_cr_eq_t_loop", "chirp period must equal the loop circulation time");
    }

    const double ratio = plan.t_pr_s / plan.t_cr_s;
    const double m = std::round(ratio);
    if (m < 1.0 || std::abs(ratio - m) > rel_tol * m) {
        violate("t_pr_integer_multiple", "t_pr must be an integer multiple of t_cr");
    } else {
        r.m_ratio = static_cast<int>(m);
    }

    r.n_max = max_subpulse_count(plan.b_obpf_hz, plan.delta_f_hz);
    if (plan.n_subpulses < 1 || plan.n_subpulses > r.n_max) {
        violate("n_le_n_max", "subpulse count must be in [1, n_max]");
    }
    if (r.m_ratio > 0 && r.m_ratio < r.n_max) {
        violate("m_ge_n_max", "t_pr must allow the loop to flush: M >= n_max");
    }
    return r;
}

std::vector<int> masked_subpulses(const WaveformPlan& plan, double band_lo_hz,
                                  double band_hi_hz) {
    if (!(band_lo_hz < band_hi_hz)) {
        throw std::invalid_argument("masked_subpulses: band_lo must be below band_hi");
    }
    std::vector<int> out;
    for (int n = 0; n < plan.n_subpulses; ++n) {
        const double carrier = subpulse_carrier(plan, n);
        if (carrier >= band_lo_hz && carrier <= band_hi_hz) out.push_back(n);
    }
    return out;
}

}  // namespace stepchirp
