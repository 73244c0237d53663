// SPDX-License-Identifier: Apache-2.0
//
// SVG rendering of an assessed scene: RoI, zone grid, both trajectories,
// and the per-horizon risk sectors at a selected timestep with severity
// color coding.

#pragma once

#include <optional>
#include <string>

#include "pcra/config.hpp"
#include "pcra/severity.hpp"

namespace pcra {

/// Render to an SVG string. The timestep defaults to the highest-severity
/// one (earliest among ties); pass at_time to pick another. Throws when the
/// assessment does not belong to the scene.
std::string render_scene_svg(const SceneAssessment& assessment, const Scene& scene,
                             const SiteConfig& config,
                             std::optional<double> at_time = std::nullopt);

void render_scene(const SceneAssessment& assessment, const Scene& scene, const SiteConfig& config,
                  const std::string& out_path, std::optional<double> at_time = std::nullopt);

}  // namespace pcra
