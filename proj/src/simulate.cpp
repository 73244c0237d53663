// SPDX-License-Identifier: Apache-2.0

#include "pcra/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pcra/rng.hpp"

namespace pcra {

void SimSpec::validate() const {
    if (scene_count == 0) throw std::invalid_argument("SimSpec: scene_count must be positive");
    if (!(vehicle_speed_min > 0.0 && vehicle_speed_max >= vehicle_speed_min)) {
        throw std::invalid_argument("SimSpec: invalid vehicle speed range");
    }
    if (!(pedestrian_speed_min > 0.0 && pedestrian_speed_max >= pedestrian_speed_min)) {
        throw std::invalid_argument("SimSpec: invalid pedestrian speed range");
    }
    for (double p : {yield_probability, parallel_path_probability}) {
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("SimSpec: probability outside [0,1]");
    }
    if (noise_amplitude < 0.0) throw std::invalid_argument("SimSpec: negative noise amplitude");
    if (frame_rate_hz <= 0.0) throw std::invalid_argument("SimSpec: frame rate must be positive");
}

namespace {

struct VehiclePath {
    std::vector<double> times;
    std::vector<double> xs;
    double crossing_time{0.0};  // when x passes x_cross
};

// Integrate the vehicle along +x, optionally slowing near the crosswalk.
VehiclePath integrate_vehicle(double x_start, double x_end, double x_cross, double speed,
                              bool yields, double slow_length, double dt) {
    VehiclePath path;
    double x = x_start;
    double t = 0.0;
    bool crossed = false;
    while (x < x_end) {
        path.times.push_back(t);
        path.xs.push_back(x);
        double v = speed;
        if (yields) {
            const double rel = (x - x_cross) / slow_length;
            v = speed * (1.0 - 0.5 * std::exp(-rel * rel));
        }
        const double x_next = x + v * dt;
        if (!crossed && x < x_cross && x_next >= x_cross) {
            path.crossing_time = t + (x_cross - x) * dt / (x_next - x);
            crossed = true;
        }
        x = x_next;
        t += dt;
    }
    path.times.push_back(t);
    path.xs.push_back(x);
    if (!crossed) path.crossing_time = t;
    return path;
}

}  // namespace

SimResult simulate(const SimSpec& spec, const SiteConfig& config) {
    spec.validate();
    config.roi.validate();
    Rng rng(spec.seed);

    const double dt = 1.0 / spec.frame_rate_hz;
    const double roi_w = config.roi.x_max - config.roi.x_min;
    const double roi_h = config.roi.y_max - config.roi.y_min;
    const double x_cross = config.roi.x_min + 0.5 * roi_w;  // crosswalk center
    const double margin = 0.15 * roi_w;                     // approach outside the RoI

    SimResult result;
    result.scenes.reserve(spec.scene_count);
    result.labels.reserve(spec.scene_count);

    for (std::size_t i = 0; i < spec.scene_count; ++i) {
        const std::string scene_id = "sim-" + std::to_string(i);
        const double v_speed = rng.uniform(spec.vehicle_speed_min, spec.vehicle_speed_max);
        const double p_speed = rng.uniform(spec.pedestrian_speed_min, spec.pedestrian_speed_max);
        const bool yields = rng.next_unit() < spec.yield_probability;
        const bool parallel = rng.next_unit() < spec.parallel_path_probability;
        const double gap = rng.uniform(0.0, spec.gap_abs_max);
        const bool ped_first = rng.next_unit() < 0.5;
        const bool ped_upward = rng.next_unit() < 0.5;

        // vehicle along y = y_lane
        const double y_lane = config.roi.y_min + roi_h * rng.uniform(0.45, 0.55);
        VehiclePath vp = integrate_vehicle(config.roi.x_min - margin, config.roi.x_max + margin,
                                           x_cross, v_speed, yields, roi_w / 8.0, dt);

        Scene scene;
        scene.scene_id = scene_id;
        scene.vehicle.object_class = ObjectClass::Vehicle;
        scene.pedestrian.object_class = ObjectClass::Pedestrian;

        SceneLabel label;
        label.scene_id = scene_id;

        // pedestrian path
        const double ped_margin = 0.1 * roi_h;
        double ped_t0 = 0.0;
        double ped_x0 = 0.0;
        double ped_y0 = 0.0;
        double ped_dir_x = 0.0;
        double ped_dir_y = 0.0;
        double ped_duration = 0.0;

        if (parallel) {
            // walks along the road far from the lane; never meets the vehicle path
            ped_y0 = ped_upward ? config.roi.y_max - 0.05 * roi_h : config.roi.y_min + 0.05 * roi_h;
            ped_x0 = config.roi.x_min + 0.05 * roi_w;
            ped_dir_x = 1.0;
            ped_dir_y = 0.0;
            ped_duration = 0.9 * roi_w / p_speed;
            ped_t0 = 0.0;
            label.paths_cross = false;
            label.min_gap_s = std::numeric_limits<double>::infinity();
        } else {
            const double y_start = ped_upward ? config.roi.y_min - ped_margin
                                              : config.roi.y_max + ped_margin;
            const double y_end = ped_upward ? config.roi.y_max + ped_margin
                                            : config.roi.y_min - ped_margin;
            ped_x0 = x_cross;
            ped_y0 = y_start;
            ped_dir_x = 0.0;
            ped_dir_y = ped_upward ? 1.0 : -1.0;
            ped_duration = std::abs(y_end - y_start) / p_speed;
            // time to reach the vehicle lane
            const double t_to_lane = std::abs(y_lane - y_start) / p_speed;
            const double ped_cross_time = vp.crossing_time + (ped_first ? -gap : gap);
            ped_t0 = ped_cross_time - t_to_lane;
            label.paths_cross = true;
            label.min_gap_s = gap;
        }

        // shift so every timestamp is non-negative
        const double shift = std::max(0.0, -ped_t0);

        scene.vehicle.samples.reserve(vp.times.size());
        for (std::size_t k = 0; k < vp.times.size(); ++k) {
            const double nx = spec.noise_amplitude > 0.0 ? rng.normal(0.0, spec.noise_amplitude) : 0.0;
            const double ny = spec.noise_amplitude > 0.0 ? rng.normal(0.0, spec.noise_amplitude) : 0.0;
            scene.vehicle.samples.push_back({vp.times[k] + shift, {vp.xs[k] + nx, y_lane + ny}});
        }

        const auto ped_samples = static_cast<std::size_t>(std::floor(ped_duration / dt)) + 1;
        scene.pedestrian.samples.reserve(ped_samples);
        for (std::size_t k = 0; k < ped_samples; ++k) {
            const double t = ped_t0 + static_cast<double>(k) * dt;
            const double nx = spec.noise_amplitude > 0.0 ? rng.normal(0.0, spec.noise_amplitude) : 0.0;
            const double ny = spec.noise_amplitude > 0.0 ? rng.normal(0.0, spec.noise_amplitude) : 0.0;
            const double dist = p_speed * static_cast<double>(k) * dt;
            scene.pedestrian.samples.push_back(
                {t + shift, {ped_x0 + ped_dir_x * dist + nx, ped_y0 + ped_dir_y * dist + ny}});
        }

        result.scenes.push_back(std::move(scene));
        result.labels.push_back(label);
    }
    return result;
}

}  // namespace pcra
