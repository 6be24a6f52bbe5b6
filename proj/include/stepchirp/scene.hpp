// scene.hpp - point-scatterer targets, rotation geometry, channel impairments
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace stepchirp {

struct Scatterer {
    double x_m = 0.0;  // cross-range offset at t = 0
    double y_m = 0.0;  // down-range offset at t = 0, relative to scene center
    double reflectivity = 1.0;
};

/// Targets on a rotator plus the channel model. Immutable during a run;
/// delay evaluation is pure, so trains can be simulated in parallel.
struct Scene {
    std::vector<Scatterer> scatterers;
    double center_range_m = 1.5;      // radar to rotation center
    double omega_rad_s = 0.0;         // rotation rate
    std::optional<double> snr_db;     // absent = noiseless; see noise_sigma()
    std::uint64_t rng_seed = 1;

    /// Noise standard deviation relative to a unit-amplitude echo tone:
    /// sigma = 10^(-snr_db/20); 0 when noise is disabled.
    double noise_sigma() const;
};

/// Two-way delay of scatterer `s` at time `t`. The scatterer rotates about
/// the scene center by omega*t; the instantaneous range uses the far-field
/// projection R(t) = center_range + y*cos(omega t) - x*sin(omega t), valid
/// for |x|,|y| << center_range.
double scatterer_delay(const Scene& scene, const Scatterer& s, double t_s);

/// Rotated scatterer coordinates at time t (same convention as
/// scatterer_delay; preserves the distance from the scene center).
std::pair<double, double> rotated_position(const Scatterer& s, double angle_rad);

/// Two unit scatterers at y = +-separation/2 on a static mount.
Scene make_two_target_scene(double separation_m, double center_range_m = 1.5);

/// Point scatterers sampled along two arms of a letter "V" with the given
/// side length and opening angle, spaced at most `spacing_m` apart, with the
/// centroid moved to the rotation center.
Scene make_v_scene(double side_m, double angle_deg, double spacing_m,
                   double center_range_m = 1.5, double omega_rad_s = 0.0);

/// Interference specification: either a frequency band resolved against the
/// plan, or an explicit list of subpulse indices.
struct GapSpec {
    std::optional<std::pair<double, double>> band_hz;
    std::vector<int> indices;
};

}  // namespace stepchirp
