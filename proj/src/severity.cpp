// SPDX-License-Identifier: Apache-2.0

#include "pcra/severity.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace pcra {

namespace {

constexpr double kEps = 1e-12;

double cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
    if (std::abs(cross(a, b, p)) > kEps * (std::abs(b.x - a.x) + std::abs(b.y - a.y) + 1.0)) {
        return false;
    }
    return p.x >= std::min(a.x, b.x) - kEps && p.x <= std::max(a.x, b.x) + kEps &&
           p.y >= std::min(a.y, b.y) - kEps && p.y <= std::max(a.y, b.y) + kEps;
}

int orientation(const Point& a, const Point& b, const Point& c) {
    const double v = cross(a, b, c);
    const double scale = std::abs(b.x - a.x) + std::abs(b.y - a.y) + std::abs(c.x - a.x) +
                         std::abs(c.y - a.y) + 1.0;
    if (v > kEps * scale) return 1;
    if (v < -kEps * scale) return -1;
    return 0;
}

bool segments_intersect(const Point& p1, const Point& p2, const Point& p3, const Point& p4) {
    const int o1 = orientation(p1, p2, p3);
    const int o2 = orientation(p1, p2, p4);
    const int o3 = orientation(p3, p4, p1);
    const int o4 = orientation(p3, p4, p2);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(p1, p2, p3)) return true;
    if (o2 == 0 && on_segment(p1, p2, p4)) return true;
    if (o3 == 0 && on_segment(p3, p4, p1)) return true;
    if (o4 == 0 && on_segment(p3, p4, p2)) return true;
    return false;
}

// edges of the closed ring (size >= 3) or the single segment (size == 2)
std::size_t edge_count(const Polygon& poly) {
    if (poly.size() < 2) return 0;
    return poly.size() == 2 ? 1 : poly.size();
}

std::pair<Point, Point> edge_at(const Polygon& poly, std::size_t i) {
    return {poly[i], poly[(i + 1) % poly.size()]};
}

}  // namespace

bool point_in_polygon(const Point& p, const Polygon& poly) {
    if (poly.empty()) return false;
    if (poly.size() == 1) {
        return std::abs(p.x - poly[0].x) <= kEps && std::abs(p.y - poly[0].y) <= kEps;
    }
    if (poly.size() == 2) return on_segment(poly[0], poly[1], p);

    for (std::size_t i = 0; i < poly.size(); ++i) {
        auto [a, b] = edge_at(poly, i);
        if (on_segment(a, b, p)) return true;
    }
    // ray casting toward +x
    bool inside = false;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        auto [a, b] = edge_at(poly, i);
        const bool a_above = a.y > p.y;
        const bool b_above = b.y > p.y;
        if (a_above == b_above) continue;
        const double x_cross = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
        if (x_cross > p.x) inside = !inside;
    }
    return inside;
}

bool polygons_intersect(const Polygon& a, const Polygon& b) {
    if (a.empty() || b.empty()) return false;
    if (a.size() == 1) return point_in_polygon(a[0], b);
    if (b.size() == 1) return point_in_polygon(b[0], a);

    for (std::size_t i = 0; i < edge_count(a); ++i) {
        auto [a1, a2] = edge_at(a, i);
        for (std::size_t j = 0; j < edge_count(b); ++j) {
            auto [b1, b2] = edge_at(b, j);
            if (segments_intersect(a1, a2, b1, b2)) return true;
        }
    }
    // containment with no edge crossings
    if (point_in_polygon(a[0], b)) return true;
    if (point_in_polygon(b[0], a)) return true;
    return false;
}

Polygon sector_to_polygon(const PcraSector& s, int arc_segments) {
    if (arc_segments < 2) throw std::invalid_argument("sector_to_polygon: arc_segments must be >= 2");
    if (s.radius <= 0.0) return {s.apex};

    const double width = std::clamp(s.width(), 0.0, 360.0);
    Polygon poly;
    if (width >= 360.0) {
        // full circle: closed ring, no apex
        poly.reserve(static_cast<std::size_t>(arc_segments));
        for (int k = 0; k < arc_segments; ++k) {
            const double deg = s.theta_lo + 360.0 * k / arc_segments;
            const Point d = direction_of(deg);
            poly.push_back({s.apex.x + s.radius * d.x, s.apex.y + s.radius * d.y});
        }
        return poly;
    }
    if (width <= 0.0) {
        const Point d = direction_of(s.theta_lo);
        return {s.apex, {s.apex.x + s.radius * d.x, s.apex.y + s.radius * d.y}};
    }
    poly.reserve(static_cast<std::size_t>(arc_segments) + 2);
    poly.push_back(s.apex);
    for (int k = 0; k <= arc_segments; ++k) {
        const double deg = s.theta_lo + width * k / arc_segments;
        const Point d = direction_of(deg);
        poly.push_back({s.apex.x + s.radius * d.x, s.apex.y + s.radius * d.y});
    }
    return poly;
}

bool sectors_overlap(const PcraSector& a, const PcraSector& b, int arc_segments) {
    // cheap reject: disjoint bounding circles
    const double dx = a.apex.x - b.apex.x;
    const double dy = a.apex.y - b.apex.y;
    const double reach = a.radius + b.radius;
    if (dx * dx + dy * dy > reach * reach + kEps) return false;
    return polygons_intersect(sector_to_polygon(a, arc_segments),
                              sector_to_polygon(b, arc_segments));
}

bool point_in_sector(const Point& p, const PcraSector& s) {
    const double dx = p.x - s.apex.x;
    const double dy = p.y - s.apex.y;
    const double dist = std::hypot(dx, dy);
    if (dist > s.radius) return false;
    if (dist == 0.0) return true;
    const double width = std::clamp(s.width(), 0.0, 360.0);
    if (width >= 360.0) return true;
    const double bearing = bearing_of(dx, dy);
    double rel = bearing - wrap_degree(s.theta_lo);
    if (rel < 0.0) rel += 360.0;
    return rel <= width;
}

const char* to_string(SeverityLevel level) {
    switch (level) {
        case SeverityLevel::Danger: return "danger";
        case SeverityLevel::Warning: return "warning";
        default: return "relative_safe";
    }
}

SeverityLevel classify_timestep(const OverlapFlags& flags) {
    if (flags.t1 && flags.t1_known) return SeverityLevel::Danger;
    if (flags.t2 && flags.t2_known) return SeverityLevel::Warning;
    return SeverityLevel::RelativeSafe;
}

namespace {

// Net displacement over the first `steps` rollout vectors.
VelocityVector net_displacement(const std::vector<VelocityVector>& rollout_vels,
                                std::size_t steps) {
    double dx = 0.0;
    double dy = 0.0;
    for (std::size_t i = 0; i < steps; ++i) {
        const Point d = direction_of(rollout_vels[i].degree);
        dx += rollout_vels[i].speed * d.x;
        dy += rollout_vels[i].speed * d.y;
    }
    const double dist = std::hypot(dx, dy);
    VelocityVector v;
    v.speed = dist;
    if (dist > 0.0) {
        v.degree = bearing_of(dx, dy);
    } else {
        v.degree = 0.0;
        v.zero_displacement = true;
    }
    return v;
}

struct ObjectStep {
    std::optional<int> zone;
    std::array<std::optional<PcraSector>, 3> sectors;
};

}  // namespace

SceneAssessment assess_scene(const Scene& scene, const SiteModels& models, const DistStore& dists,
                             const ZoneGrid& grid, double alpha, const AssessParams& params) {
    SceneAssessment out;
    out.scene_id = scene.scene_id;

    scene.vehicle.validate();
    scene.pedestrian.validate();
    const double dt = scene.vehicle.step_seconds();
    if (std::abs(scene.pedestrian.step_seconds() - dt) > 1e-9) {
        throw std::invalid_argument("assess_scene: trajectories sampled at different rates");
    }

    const auto horizons = dists.horizons_s();
    if (horizons.size() > 3) throw std::invalid_argument("assess_scene: more than 3 horizons");
    std::vector<std::size_t> horizon_steps;
    for (int h : horizons) {
        const double ratio = static_cast<double>(h) / dt;
        const double rounded = std::round(ratio);
        if (std::abs(ratio - rounded) > 1e-9 || rounded < 1.0) {
            throw std::invalid_argument("assess_scene: horizon is not a whole number of steps");
        }
        horizon_steps.push_back(static_cast<std::size_t>(rounded));
    }
    const std::size_t max_steps = *std::max_element(horizon_steps.begin(), horizon_steps.end());

    const auto window = static_cast<std::size_t>(models.vehicle_speed.config.window);
    const auto veh_vels = points_to_velocities(scene.vehicle);
    const auto ped_vels = points_to_velocities(scene.pedestrian);

    // shared grid index of each trajectory's first sample
    const auto grid_index = [dt](double t) {
        return static_cast<long>(std::llround(t / dt));
    };
    const long veh_k0 = grid_index(scene.vehicle.time(0));
    const long ped_k0 = grid_index(scene.pedestrian.time(0));
    const long k_lo = std::max(veh_k0, ped_k0);
    const long k_hi = std::min(veh_k0 + static_cast<long>(scene.vehicle.size()) - 1,
                               ped_k0 + static_cast<long>(scene.pedestrian.size()) - 1);

    bool any_concurrent_roi = false;

    auto object_step = [&](const Trajectory& traj, const std::vector<VelocityVector>& vels,
                           std::size_t idx) -> ObjectStep {
        ObjectStep step;
        step.zone = grid.assign_zone(traj.object_class, traj.point(idx));
        if (!step.zone) return step;
        const std::span<const VelocityVector> observed(vels.data() + (idx - window), window);
        const auto predicted =
            rollout(models.speed_of(traj.object_class), models.degree_of(traj.object_class),
                    observed, max_steps);
        for (std::size_t hi = 0; hi < horizon_steps.size(); ++hi) {
            const VelocityVector disp = net_displacement(predicted, horizon_steps[hi]);
            const EmpiricalDist* speed_dist = dists.find_usable(
                {Feature::Speed, traj.object_class, *step.zone, horizons[hi]});
            const EmpiricalDist* degree_dist = dists.find_usable(
                {Feature::Degree, traj.object_class, *step.zone, horizons[hi]});
            if (speed_dist == nullptr || degree_dist == nullptr) continue;
            step.sectors[hi] =
                build_pcra(traj.point(idx), disp, *speed_dist, *degree_dist, alpha, dists.n_min());
        }
        return step;
    };

    for (long k = k_lo; k <= k_hi; ++k) {
        const auto vi = static_cast<std::size_t>(k - veh_k0);
        const auto pi = static_cast<std::size_t>(k - ped_k0);
        if (vi < window || pi < window) continue;

        const ObjectStep veh = object_step(scene.vehicle, veh_vels, vi);
        const ObjectStep ped = object_step(scene.pedestrian, ped_vels, pi);
        if (veh.zone && ped.zone) any_concurrent_roi = true;

        TimestepAssessment ts;
        ts.time_s = scene.vehicle.time(vi);
        ts.vehicle_sectors = veh.sectors;
        ts.pedestrian_sectors = ped.sectors;

        bool overlap[3] = {false, false, false};
        bool known[3] = {false, false, false};
        for (std::size_t hi = 0; hi < horizon_steps.size(); ++hi) {
            if (veh.sectors[hi] && ped.sectors[hi]) {
                known[hi] = true;
                overlap[hi] = sectors_overlap(*veh.sectors[hi], *ped.sectors[hi],
                                              params.arc_segments);
            }
        }
        ts.flags = {overlap[0], overlap[1], overlap[2], known[0], known[1], known[2]};
        ts.severity = classify_timestep(ts.flags);
        out.steps.push_back(std::move(ts));
    }

    if (!any_concurrent_roi) {
        out.skipped = true;
        out.skip_reason = out.steps.empty()
                              ? "objects never concurrently observed with full windows"
                              : "objects never concurrently inside the RoI";
        out.steps.clear();
        return out;
    }

    SeverityLevel verdict = SeverityLevel::RelativeSafe;
    for (const auto& ts : out.steps) verdict = std::max(verdict, ts.severity);
    out.scene_verdict = verdict;
    return out;
}

std::vector<SceneAssessment> assess_corpus(std::span<const Scene> scenes, const SiteModels& models,
                                           const DistStore& dists, const ZoneGrid& grid,
                                           double alpha, const AssessParams& params,
                                           unsigned threads) {
    std::vector<SceneAssessment> out(scenes.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, scenes.empty() ? 1 : static_cast<unsigned>(scenes.size()));

    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::atomic<bool> failed{false};
    std::string error_message;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= scenes.size() || failed.load()) break;
            try {
                out[i] = assess_scene(scenes[i], models, dists, grid, alpha, params);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                failed.store(true);
                if (error_message.empty()) {
                    error_message = "scene " + scenes[i].scene_id + ": " + e.what();
                }
            }
        }
    };
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failed.load()) throw std::runtime_error("assess_corpus: " + error_message);
    return out;
}

CorpusCounts aggregate_corpus(std::span<const SceneAssessment> assessments) {
    CorpusCounts counts;
    counts.total = assessments.size();
    for (const auto& a : assessments) {
        if (a.skipped) {
            ++counts.skipped;
        } else if (a.scene_verdict == SeverityLevel::Danger) {
            ++counts.danger;
        } else if (a.scene_verdict == SeverityLevel::Warning) {
            ++counts.warning;
        } else {
            ++counts.relative_safe;
        }
    }
    return counts;
}

}  // namespace pcra
