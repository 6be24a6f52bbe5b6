#include <doctest.h>

#include <cmath>

#include "stepchirp/plan.hpp"
#include "test_helpers.hpp"

using namespace stepchirp;
using testutil::reference_plan;

TEST_CASE("max_subpulse_count") {
    CHECK(max_subpulse_count(16e9, 2e9) == 9);
    CHECK(max_subpulse_count(1.999e9, 2e9) == 1);
    CHECK(max_subpulse_count(34e9, 2e9) == 18);
    CHECK_THROWS_AS(max_subpulse_count(0.0, 2e9), std::invalid_argument);
    CHECK_THROWS_AS(max_subpulse_count(16e9, -1.0), std::invalid_argument);
}

TEST_CASE("subpulse carriers and spans") {
    const WaveformPlan p = reference_plan();
    // First subpulse sweeps 16.9-19.1 GHz, last 32.9-35.1 GHz.
    CHECK(subpulse_band_lo(p, 0) == doctest::Approx(16.9e9));
    CHECK(subpulse_band_hi(p, 0) == doctest::Approx(19.1e9));
    CHECK(subpulse_band_lo(p, 8) == doctest::Approx(32.9e9));
    CHECK(subpulse_band_hi(p, 8) == doctest::Approx(35.1e9));
    CHECK_THROWS_AS(subpulse_carrier(p, 9), std::out_of_range);
    CHECK_THROWS_AS(subpulse_carrier(p, -1), std::out_of_range);

    // Degenerate no-step plan: carrier == center frequency for all n.
    WaveformPlan flat = p;
    flat.delta_f_hz = 0.0;
    flat.f_offset_hz = 0.0;
    // delta_f = 0 fails validation but the carrier formula stays defined:
    // f_center + (n+1)*0 + 0.
    for (int n = 0; n < flat.n_subpulses; ++n) {
        CHECK(subpulse_carrier(flat, n) == doctest::Approx(flat.f_center_hz()));
    }

    // Carrier spacing is exactly delta_f.
    for (int n = 0; n + 1 < p.n_subpulses; ++n) {
        CHECK(subpulse_carrier(p, n + 1) - subpulse_carrier(p, n) ==
              doctest::Approx(p.delta_f_hz));
    }
}

TEST_CASE("equivalent bandwidth and resolution") {
    const WaveformPlan p = reference_plan();
    CHECK(equivalent_bandwidth(p) == doctest::Approx(18.2e9));
    CHECK(equivalent_bandwidth(p.with_subpulses(3)) == doctest::Approx(6.2e9));
    CHECK(equivalent_bandwidth(p.with_subpulses(6)) == doctest::Approx(12.2e9));
    CHECK(equivalent_bandwidth(p.with_subpulses(1)) == doctest::Approx(2.2e9));

    CHECK(theoretical_resolution(18.2e9) == doctest::Approx(8.236e-3).epsilon(1e-3));
    CHECK(theoretical_resolution(34.9e9) == doctest::Approx(4.3e-3).epsilon(0.01));
    CHECK(theoretical_resolution(kSpeedOfLight / 2.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(theoretical_resolution(0.0), std::invalid_argument);

    // Monotonicity across the whole sweep.
    double prev_bw = 0.0;
    double prev_res = 1e9;
    for (int n = 1; n <= 9; ++n) {
        const double bw = equivalent_bandwidth(p.with_subpulses(n));
        const double res = theoretical_resolution(bw);
        CHECK(bw >= prev_bw);
        CHECK(res <= prev_res);
        prev_bw = bw;
        prev_res = res;
    }

    const BandSpan band = synthesized_band(p);
    CHECK(band.lo_hz == doctest::Approx(16.9e9));
    CHECK(band.hi_hz == doctest::Approx(35.1e9));
    CHECK(band.center_hz() == doctest::Approx(26.0e9));
}

TEST_CASE("validate_plan accepts the reference configuration") {
    const PlanValidation v = validate_plan(reference_plan());
    CHECK(v.ok());
    CHECK(v.m_ratio == 14);
    CHECK(v.n_max == 9);
}

TEST_CASE("validate_plan flags every single perturbation") {
    const WaveformPlan base = reference_plan();

    SUBCASE("delta_f >= b_chirp") {
        WaveformPlan p = base.with_subpulses(5);  // keeps n <= n_max at 2.3 GHz
        p.delta_f_hz = 2.3e9;
        const auto v = validate_plan(p);
        CHECK(v.violations.size() == 1);
        CHECK(v.has("delta_f_lt_b_chirp"));
    }
    SUBCASE("t_pw exceeds loop time") {
        WaveformPlan p = base;
        p.t_pw_s = 6e-6;
        const auto v = validate_plan(p);
        CHECK(v.violations.size() == 1);
        CHECK(v.has("t_loop_ge_t_pw"));
    }
    SUBCASE("t_cw exceeds seed pulse width") {
        WaveformPlan p = base;
        p.t_cw_s = 5.1e-6;
        const auto v = validate_plan(p);
        CHECK(v.violations.size() == 1);
        CHECK(v.has("t_pw_ge_t_cw"));
    }
    SUBCASE("t_pr not an integer multiple") {
        WaveformPlan p = base;
        p.t_pr_s = 71.0e-6;
        const auto v = validate_plan(p);
        CHECK(v.has("t_pr_integer_multiple"));
    }
    SUBCASE("t_cr differs from loop time") {
        WaveformPlan p = base;
        p.t_loop_s = 5.2e-6;
        const auto v = validate_plan(p);
        CHECK(v.has("t_cr_eq_t_loop"));
    }
    SUBCASE("too many subpulses") {
        WaveformPlan p = base.with_subpulses(10);
        const auto v = validate_plan(p);
        CHECK(v.violations.size() == 1);
        CHECK(v.has("n_le_n_max"));
    }
    SUBCASE("loop cannot flush before the next seed pulse") {
        WaveformPlan p = base;
        p.t_pr_s = 5 * p.t_cr_s;  // M=5 < n_max=9
        const auto v = validate_plan(p);
        CHECK(v.has("m_ge_n_max"));
    }
    SUBCASE("non-positive entry") {
        WaveformPlan p = base;
        p.b_chirp_hz = 0.0;
        const auto v = validate_plan(p);
        CHECK(v.violations.size() == 1);
        CHECK(v.has("positive"));
    }
}

TEST_CASE("masked_subpulses") {
    const WaveformPlan p = reference_plan();

    // The 22.9-25.1 GHz interference band knocks out exactly the fourth
    // subpulse (index 3), whose sweep it covers.
    CHECK(masked_subpulses(p, 22.9e9, 25.1e9) == std::vector<int>{3});

    // A band below the synthesized span masks nothing.
    CHECK(masked_subpulses(p, 1e9, 16.8e9).empty());

    // The full span masks everything.
    const auto all = masked_subpulses(p, 16.9e9, 35.1e9);
    REQUIRE(all.size() == 9);
    for (int n = 0; n < 9; ++n) CHECK(all[std::size_t(n)] == n);

    // A narrow band inside one subpulse still masks it.
    CHECK(masked_subpulses(p, 23.5e9, 24.5e9) == std::vector<int>{3});

    CHECK_THROWS_AS(masked_subpulses(p, 2e9, 1e9), std::invalid_argument);
}

TEST_CASE("masked_subpulses: disjoint spans (delta_f > b_chirp layout)") {
    // With delta_f >= b_chirp the sweeps no longer touch; a band falling in
    // the gap between two spans masks nothing.
    WaveformPlan p = reference_plan();
    p.delta_f_hz = 3e9;  // spans: [17.9,20.1], [20.9,23.1], ... 3 GHz apart
    p.n_subpulses = 5;
    // (plan is invalid for stitching; the masking geometry is still defined)
    CHECK(masked_subpulses(p, 20.2e9, 20.8e9).empty());
    CHECK(masked_subpulses(p, 20.9e9, 23.1e9) == std::vector<int>{1});
}
