#include "stepchirp/scene.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "stepchirp/plan.hpp"

namespace stepchirp {

double Scene::noise_sigma() const {
    if (!snr_db) return 0.0;
    return std::pow(10.0, -*snr_db / 20.0);
}

std::pair<double, double> rotated_position(const Scatterer& s, double angle_rad) {
    const double c = std::cos(angle_rad);
    const double sn = std::sin(angle_rad);
    return {s.x_m * c + s.y_m * sn, s.y_m * c - s.x_m * sn};
}

double scatterer_delay(const Scene& scene, const Scatterer& s, double t_s) {
    const auto [x, y] = rotated_position(s, scene.omega_rad_s * t_s);
    (void)x;  // cross-range does not enter the range projection
    const double range = scene.center_range_m + y;
    return 2.0 * range / kSpeedOfLight;
}

Scene make_two_target_scene(double separation_m, double center_range_m) {
    if (separation_m <= 0.0) {
        throw std::invalid_argument("make_two_target_scene: separation must be positive");
    }
    Scene scene;
    scene.center_range_m = center_range_m;
    scene.scatterers = {{0.0, -0.5 * separation_m, 1.0},
                        {0.0, +0.5 * separation_m, 1.0}};
    return scene;
}

Scene make_v_scene(double side_m, double angle_deg, double spacing_m,
                   double center_range_m, double omega_rad_s) {
    if (side_m <= 0.0 || spacing_m <= 0.0 || spacing_m > side_m) {
        throw std::invalid_argument("make_v_scene: need 0 < spacing <= side");
    }
    if (angle_deg <= 0.0 || angle_deg > 180.0) {
        throw std::invalid_argument("make_v_scene: angle must be in (0, 180]");
    }

    Scene scene;
    scene.center_range_m = center_range_m;
    scene.omega_rad_s = omega_rad_s;

    // Arms open upward, symmetric about the y axis.
    const double half = 0.5 * angle_deg * std::numbers::pi / 180.0;
    const int per_arm = static_cast<int>(std::ceil(side_m / spacing_m));
    const double step = side_m / per_arm;

    scene.scatterers.push_back({0.0, 0.0, 1.0});  // vertex
    for (int j = 1; j <= per_arm; ++j) {
        const double d = j * step;
        scene.scatterers.push_back({-d * std::sin(half), d * std::cos(half), 1.0});
        scene.scatterers.push_back({+d * std::sin(half), d * std::cos(half), 1.0});
    }

    // Center the point cloud on the rotation center.
    double cx = 0.0;
    double cy = 0.0;
    for (const auto& s : scene.scatterers) {
        cx += s.x_m;
        cy += s.y_m;
    }
    cx /= static_cast<double>(scene.scatterers.size());
    cy /= static_cast<double>(scene.scatterers.size());
    for (auto& s : scene.scatterers) {
        s.x_m -= cx;
        s.y_m -= cy;
    }
    return scene;
}

}  // namespace stepchirp
