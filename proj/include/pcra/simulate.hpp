// SPDX-License-Identifier: Apache-2.0
//
// Kinematic crosswalk scene generator: vehicles traverse the RoI
// horizontally, pedestrians cross vertically at the crosswalk, with
// controllable arrival-time gaps at the crossing point. Stands in for
// camera-derived trajectories and provides ground-truth conflict labels.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcra/config.hpp"
#include "pcra/trajectory.hpp"

namespace pcra {

struct SimSpec {
    std::size_t scene_count{200};
    double vehicle_speed_min{7.0};   // units/s
    double vehicle_speed_max{10.0};
    double pedestrian_speed_min{1.2};
    double pedestrian_speed_max{1.6};
    double yield_probability{0.2};   // vehicle decelerates near the crosswalk
    double gap_abs_max{8.0};         // |arrival gap| drawn uniform in [0, gap_abs_max]
    double parallel_path_probability{0.0};  // pedestrian walks along the road instead
    double noise_amplitude{0.05};    // gaussian positional jitter, units
    double frame_rate_hz{25.0};      // raw sampling before ingestion
    std::uint64_t seed{0};

    void validate() const;
};

struct SceneLabel {
    std::string scene_id;
    bool paths_cross{true};
    double min_gap_s{0.0};  // |vehicle crossing time - pedestrian crossing time|
};

struct SimResult {
    std::vector<Scene> scenes;  // raw: noisy, frame-rate sampled, unsmoothed
    std::vector<SceneLabel> labels;
};

/// Deterministic per seed. Scene supports are staggered so both objects are
/// present simultaneously (interactive scenes).
SimResult simulate(const SimSpec& spec, const SiteConfig& config);

}  // namespace pcra
