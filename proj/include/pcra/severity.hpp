// SPDX-License-Identifier: Apache-2.0
//
// Sector-overlap geometry and the danger / warning / relative-safe
// classification of vehicle-pedestrian scenes.

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcra/lstm.hpp"
#include "pcra/risk.hpp"
#include "pcra/trajectory.hpp"

namespace pcra {

using Polygon = std::vector<Point>;

/// Discretize a sector: apex followed by arc_segments+1 points along the
/// arc. Radius 0 collapses to a single point, width 0 to a 2-vertex
/// segment, width 360 to a closed ring without the apex.
Polygon sector_to_polygon(const PcraSector& s, int arc_segments);

/// True iff the polygonal approximations intersect (edge crossing or
/// containment of any vertex, apexes included). Symmetric.
bool sectors_overlap(const PcraSector& a, const PcraSector& b, int arc_segments = 32);

/// General simple-polygon intersection test; handles degenerate inputs
/// (single points, segments).
bool polygons_intersect(const Polygon& a, const Polygon& b);

/// Point containment including the boundary.
bool point_in_polygon(const Point& p, const Polygon& poly);

/// Exact point-in-sector membership (distance and bearing test); the
/// Monte-Carlo oracle for the polygon path.
bool point_in_sector(const Point& p, const PcraSector& s);

enum class SeverityLevel { RelativeSafe = 0, Warning = 1, Danger = 2 };

const char* to_string(SeverityLevel level);

/// Per-horizon overlap outcome. A horizon with no distribution coverage is
/// recorded as indeterminate and treated as no-overlap.
struct OverlapFlags {
    bool t1{false};
    bool t2{false};
    bool t3{false};
    bool t1_known{true};
    bool t2_known{true};
    bool t3_known{true};
};

/// Danger if the 1 s areas overlap; else Warning on 2 s overlap; else
/// RelativeSafe (whether or not the 3 s areas overlap). Danger always takes
/// precedence.
SeverityLevel classify_timestep(const OverlapFlags& flags);

/// The four trained networks of one site.
struct SiteModels {
    LstmModel vehicle_speed;
    LstmModel vehicle_degree;
    LstmModel pedestrian_speed;
    LstmModel pedestrian_degree;

    [[nodiscard]] const LstmModel& speed_of(ObjectClass c) const {
        return c == ObjectClass::Vehicle ? vehicle_speed : pedestrian_speed;
    }
    [[nodiscard]] const LstmModel& degree_of(ObjectClass c) const {
        return c == ObjectClass::Vehicle ? vehicle_degree : pedestrian_degree;
    }
};

struct TimestepAssessment {
    double time_s{0.0};
    std::array<std::optional<PcraSector>, 3> vehicle_sectors;     // by horizon
    std::array<std::optional<PcraSector>, 3> pedestrian_sectors;  // by horizon
    OverlapFlags flags;
    SeverityLevel severity{SeverityLevel::RelativeSafe};
};

struct SceneAssessment {
    std::string scene_id;
    std::vector<TimestepAssessment> steps;
    SeverityLevel scene_verdict{SeverityLevel::RelativeSafe};
    bool skipped{false};
    std::string skip_reason;
};

struct AssessParams {
    int arc_segments{32};
};

/// Assess one scene: at every timestep where both objects have a full
/// observation window, roll out both objects' networks, build per-horizon
/// PCRAs from the store, and classify the overlap. The scene verdict is
/// the maximum timestep severity. Scenes whose objects are never
/// concurrently inside the RoI are skipped with a reason.
SceneAssessment assess_scene(const Scene& scene, const SiteModels& models, const DistStore& dists,
                             const ZoneGrid& grid, double alpha, const AssessParams& params = {});

/// Scene-parallel assessment merged in scene order.
std::vector<SceneAssessment> assess_corpus(std::span<const Scene> scenes, const SiteModels& models,
                                           const DistStore& dists, const ZoneGrid& grid,
                                           double alpha, const AssessParams& params = {},
                                           unsigned threads = 0);

struct CorpusCounts {
    std::size_t total{0};
    std::size_t danger{0};
    std::size_t warning{0};
    std::size_t relative_safe{0};
    std::size_t skipped{0};

    [[nodiscard]] double danger_ratio() const {
        return total == 0 ? 0.0 : static_cast<double>(danger) / static_cast<double>(total);
    }
    [[nodiscard]] double warning_ratio() const {
        return total == 0 ? 0.0 : static_cast<double>(warning) / static_cast<double>(total);
    }
};

CorpusCounts aggregate_corpus(std::span<const SceneAssessment> assessments);

}  // namespace pcra
