// SPDX-License-Identifier: Apache-2.0

#include "pcra/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace pcra {

namespace {

const char* severity_color(SeverityLevel level) {
    switch (level) {
        case SeverityLevel::Danger: return "#d32f2f";
        case SeverityLevel::Warning: return "#f57c00";
        default: return "#388e3c";
    }
}

struct ViewTransform {
    double x_min, y_min, x_max, y_max;
    double scale;
    double height_px;

    double sx(double x) const { return (x - x_min) * scale; }
    double sy(double y) const { return height_px - (y - y_min) * scale; }  // y-up scene
};

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(9) << v;
    return os.str();
}

void polyline(std::ostringstream& os, const Trajectory& traj, const ViewTransform& vt,
              const char* color) {
    os << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& s : traj.samples) {
        os << fmt(vt.sx(s.point.x)) << ',' << fmt(vt.sy(s.point.y)) << ' ';
    }
    os << "\"/>\n";
}

void sector_path(std::ostringstream& os, const PcraSector& sector, const ViewTransform& vt,
                 const char* color, int arc_segments) {
    const Polygon poly = sector_to_polygon(sector, arc_segments);
    if (poly.empty()) return;
    os << "  <path fill=\"" << color << "\" fill-opacity=\"0.18\" stroke=\"" << color
       << "\" stroke-width=\"1\" d=\"M " << fmt(vt.sx(poly[0].x)) << ' ' << fmt(vt.sy(poly[0].y));
    for (std::size_t i = 1; i < poly.size(); ++i) {
        os << " L " << fmt(vt.sx(poly[i].x)) << ' ' << fmt(vt.sy(poly[i].y));
    }
    os << " Z\"/>\n";
}

}  // namespace

std::string render_scene_svg(const SceneAssessment& assessment, const Scene& scene,
                             const SiteConfig& config, std::optional<double> at_time) {
    if (assessment.scene_id != scene.scene_id) {
        throw std::invalid_argument("render_scene: assessment for '" + assessment.scene_id +
                                    "' does not match scene '" + scene.scene_id + "'");
    }

    // pick the timestep: requested time, else highest severity, earliest tie
    const TimestepAssessment* selected = nullptr;
    for (const auto& ts : assessment.steps) {
        if (at_time) {
            if (std::abs(ts.time_s - *at_time) < 1e-9) {
                selected = &ts;
                break;
            }
        } else if (selected == nullptr || ts.severity > selected->severity) {
            selected = &ts;
        }
    }
    if (at_time && selected == nullptr) {
        throw std::invalid_argument("render_scene: no assessed timestep at requested time");
    }

    // view covers RoI plus trajectories
    double x_min = config.roi.x_min;
    double y_min = config.roi.y_min;
    double x_max = config.roi.x_max;
    double y_max = config.roi.y_max;
    for (const Trajectory* traj : {&scene.vehicle, &scene.pedestrian}) {
        for (const auto& s : traj->samples) {
            x_min = std::min(x_min, s.point.x);
            y_min = std::min(y_min, s.point.y);
            x_max = std::max(x_max, s.point.x);
            y_max = std::max(y_max, s.point.y);
        }
    }
    const double pad = 0.05 * std::max(x_max - x_min, y_max - y_min);
    x_min -= pad;
    y_min -= pad;
    x_max += pad;
    y_max += pad;

    const double width_px = 900.0;
    const double scale = width_px / (x_max - x_min);
    ViewTransform vt{x_min, y_min, x_max, y_max, scale, (y_max - y_min) * scale};

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width_px) << "\" height=\""
       << fmt(vt.height_px) << "\" viewBox=\"0 0 " << fmt(width_px) << ' ' << fmt(vt.height_px)
       << "\">\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"#fafafa\"/>\n";

    // RoI
    os << "  <rect x=\"" << fmt(vt.sx(config.roi.x_min)) << "\" y=\"" << fmt(vt.sy(config.roi.y_max))
       << "\" width=\"" << fmt((config.roi.x_max - config.roi.x_min) * scale) << "\" height=\""
       << fmt((config.roi.y_max - config.roi.y_min) * scale)
       << "\" fill=\"none\" stroke=\"#9e9e9e\" stroke-width=\"1.5\"/>\n";

    // zone grid: vertical lines (vehicle zones), horizontal lines (pedestrian zones)
    for (int z = 1; z < config.roi.n_zones; ++z) {
        const double x = config.roi.x_min + (config.roi.x_max - config.roi.x_min) * z / config.roi.n_zones;
        os << "  <line x1=\"" << fmt(vt.sx(x)) << "\" y1=\"" << fmt(vt.sy(config.roi.y_min))
           << "\" x2=\"" << fmt(vt.sx(x)) << "\" y2=\"" << fmt(vt.sy(config.roi.y_max))
           << "\" stroke=\"#e0e0e0\" stroke-width=\"0.7\"/>\n";
        const double y = config.roi.y_min + (config.roi.y_max - config.roi.y_min) * z / config.roi.n_zones;
        os << "  <line x1=\"" << fmt(vt.sx(config.roi.x_min)) << "\" y1=\"" << fmt(vt.sy(y))
           << "\" x2=\"" << fmt(vt.sx(config.roi.x_max)) << "\" y2=\"" << fmt(vt.sy(y))
           << "\" stroke=\"#e0e0e0\" stroke-width=\"0.7\"/>\n";
    }

    polyline(os, scene.vehicle, vt, "#1565c0");     // vehicle: blue
    polyline(os, scene.pedestrian, vt, "#2e7d32");  // pedestrian: green

    if (selected != nullptr) {
        const char* color = severity_color(selected->severity);
        for (int h = 0; h < 3; ++h) {
            if (selected->vehicle_sectors[h]) {
                sector_path(os, *selected->vehicle_sectors[h], vt, color, config.arc_segments);
            }
            if (selected->pedestrian_sectors[h]) {
                sector_path(os, *selected->pedestrian_sectors[h], vt, color, config.arc_segments);
            }
        }
        os << "  <text x=\"10\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">" << scene.scene_id
           << " t=" << selected->time_s << "s " << to_string(selected->severity) << "</text>\n";
    } else {
        os << "  <text x=\"10\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">" << scene.scene_id
           << " (no assessed timesteps)</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void render_scene(const SceneAssessment& assessment, const Scene& scene, const SiteConfig& config,
                  const std::string& out_path, std::optional<double> at_time) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << render_scene_svg(assessment, scene, config, at_time);
}

}  // namespace pcra
