// SPDX-License-Identifier: Apache-2.0

#include "pcra/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pcra {

namespace {
constexpr double kDegPerRad = 180.0 / std::numbers::pi;
constexpr double kRadPerDeg = std::numbers::pi / 180.0;
}  // namespace

const char* to_string(ObjectClass c) {
    return c == ObjectClass::Vehicle ? "vehicle" : "pedestrian";
}

const char* to_string(Feature f) {
    return f == Feature::Speed ? "speed" : "degree";
}

ObjectClass object_class_from_string(const std::string& s) {
    if (s == "vehicle") return ObjectClass::Vehicle;
    if (s == "pedestrian") return ObjectClass::Pedestrian;
    throw std::invalid_argument("unknown object class: " + s);
}

Feature feature_from_string(const std::string& s) {
    if (s == "speed") return Feature::Speed;
    if (s == "degree") return Feature::Degree;
    throw std::invalid_argument("unknown feature: " + s);
}

double Trajectory::step_seconds() const {
    if (samples.size() < 2) throw std::invalid_argument("trajectory has fewer than 2 samples");
    return samples[1].time_s - samples[0].time_s;
}

void Trajectory::validate() const {
    if (samples.size() < 2) throw std::invalid_argument("trajectory has fewer than 2 samples");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!std::isfinite(samples[i].point.x) || !std::isfinite(samples[i].point.y) ||
            !std::isfinite(samples[i].time_s)) {
            throw std::invalid_argument("trajectory contains non-finite values");
        }
        if (i > 0 && samples[i].time_s <= samples[i - 1].time_s) {
            throw std::invalid_argument("trajectory timestamps are not strictly increasing");
        }
    }
}

bool Scene::time_supports_overlap() const {
    if (vehicle.empty() || pedestrian.empty()) return false;
    double lo = std::max(vehicle.samples.front().time_s, pedestrian.samples.front().time_s);
    double hi = std::min(vehicle.samples.back().time_s, pedestrian.samples.back().time_s);
    return lo <= hi;
}

double wrap_degree(double degree) {
    double d = std::fmod(degree, 360.0);
    if (d < 0.0) d += 360.0;
    // fmod can return 360.0 - tiny, which rounds to 360.0 when added
    if (d >= 360.0) d = 0.0;
    return d;
}

double bearing_of(double dx, double dy) {
    return wrap_degree(std::atan2(dx, dy) * kDegPerRad);
}

Point direction_of(double degree) {
    double theta = degree * kRadPerDeg;
    return {std::sin(theta), std::cos(theta)};
}

std::vector<VelocityVector> points_to_velocities(std::span<const Point> points) {
    if (points.size() < 2) {
        throw std::invalid_argument("points_to_velocities: need at least 2 points");
    }
    std::vector<VelocityVector> out;
    out.reserve(points.size() - 1);
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        double dx = points[i + 1].x - points[i].x;
        double dy = points[i + 1].y - points[i].y;
        double dist = std::hypot(dx, dy);
        VelocityVector v;
        v.speed = dist;
        if (dist > 0.0) {
            v.degree = bearing_of(dx, dy);
        } else {
            v.degree = 0.0;
            v.zero_displacement = true;
        }
        out.push_back(v);
    }
    return out;
}

std::vector<VelocityVector> points_to_velocities(const Trajectory& traj) {
    traj.validate();
    std::vector<Point> pts;
    pts.reserve(traj.samples.size());
    for (const auto& s : traj.samples) pts.push_back(s.point);
    return points_to_velocities(pts);
}

std::vector<Point> velocities_to_points(Point start, std::span<const VelocityVector> vels) {
    std::vector<Point> out;
    out.reserve(vels.size());
    Point cur = start;
    for (const auto& v : vels) {
        Point dir = direction_of(v.degree);
        cur.x += v.speed * dir.x;
        cur.y += v.speed * dir.y;
        out.push_back(cur);
    }
    return out;
}

std::vector<double> low_pass_smooth(std::span<const double> series, int window) {
    if (series.empty()) throw std::invalid_argument("low_pass_smooth: empty series");
    if (window < 1) throw std::invalid_argument("low_pass_smooth: window must be >= 1");
    if (static_cast<std::size_t>(window) > series.size()) {
        throw std::invalid_argument("low_pass_smooth: window exceeds series length");
    }
    const int half = window / 2;
    const int n = static_cast<int>(series.size());
    std::vector<double> out(series.size());
    for (int i = 0; i < n; ++i) {
        int lo = std::max(0, i - half);
        int hi = std::min(n - 1, i + half);
        double sum = 0.0;
        for (int j = lo; j <= hi; ++j) sum += series[j];
        out[i] = sum / static_cast<double>(hi - lo + 1);
    }
    return out;
}

std::vector<Trajectory> shift_to_common_origin(std::span<const Trajectory> trajs) {
    std::vector<Trajectory> out;
    out.reserve(trajs.size());
    for (const auto& t : trajs) {
        t.validate();
        Trajectory shifted = t;
        const Point origin = t.samples.front().point;
        for (auto& s : shifted.samples) {
            s.point.x -= origin.x;
            s.point.y -= origin.y;
        }
        out.push_back(std::move(shifted));
    }
    return out;
}

std::optional<VelocityVector> displacement_over_horizon(const Trajectory& traj,
                                                        std::size_t t_index,
                                                        double horizon_s) {
    if (t_index >= traj.size()) throw std::invalid_argument("displacement_over_horizon: t_index out of range");
    const double dt = traj.step_seconds();
    const double ratio = horizon_s / dt;
    const double rounded = std::round(ratio);
    if (std::abs(ratio - rounded) > 1e-9 || rounded < 1.0) {
        throw std::invalid_argument("displacement_over_horizon: horizon is not a whole number of steps");
    }
    const std::size_t steps = static_cast<std::size_t>(rounded);
    if (t_index + steps >= traj.size()) return std::nullopt;

    const Point& a = traj.point(t_index);
    const Point& b = traj.point(t_index + steps);
    double dx = b.x - a.x;
    double dy = b.y - a.y;
    double dist = std::hypot(dx, dy);
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

Trajectory resample(const Trajectory& traj, double rate_hz) {
    traj.validate();
    if (rate_hz <= 0.0) throw std::invalid_argument("resample: rate must be positive");
    const double dt = 1.0 / rate_hz;
    const double t0 = traj.samples.front().time_s;
    const double t1 = traj.samples.back().time_s;

    // Grid aligned to multiples of dt so concurrent trajectories share
    // timestamps.
    long k0 = static_cast<long>(std::ceil(t0 * rate_hz - 1e-9));
    long k1 = static_cast<long>(std::floor(t1 * rate_hz + 1e-9));
    if (k1 - k0 + 1 < 2) {
        throw std::invalid_argument("resample: fewer than 2 grid points inside trajectory support");
    }

    Trajectory out;
    out.object_class = traj.object_class;
    out.samples.reserve(static_cast<std::size_t>(k1 - k0 + 1));
    std::size_t seg = 0;
    for (long k = k0; k <= k1; ++k) {
        const double t = static_cast<double>(k) * dt;
        while (seg + 2 < traj.samples.size() && traj.samples[seg + 1].time_s < t) ++seg;
        const auto& a = traj.samples[seg];
        const auto& b = traj.samples[seg + 1];
        const double span = b.time_s - a.time_s;
        double w = span > 0.0 ? (t - a.time_s) / span : 0.0;
        w = std::clamp(w, 0.0, 1.0);
        out.samples.push_back({t, {a.point.x + w * (b.point.x - a.point.x),
                                   a.point.y + w * (b.point.y - a.point.y)}});
    }
    return out;
}

std::vector<double> unwrap_degrees(std::span<const VelocityVector> vels) {
    std::vector<double> out;
    out.reserve(vels.size());
    // First valid bearing seeds leading zero-displacement entries.
    double carry = 0.0;
    for (const auto& v : vels) {
        if (!v.zero_displacement) {
            carry = v.degree;
            break;
        }
    }
    double prev = carry;
    bool first = true;
    for (const auto& v : vels) {
        double d = v.zero_displacement ? carry : v.degree;
        if (!v.zero_displacement) carry = d;
        if (first) {
            out.push_back(d);
            prev = d;
            first = false;
            continue;
        }
        double delta = d - prev;
        delta -= 360.0 * std::round(delta / 360.0);
        double unwrapped = prev + delta;
        out.push_back(unwrapped);
        prev = unwrapped;
        if (!v.zero_displacement) carry = unwrapped;
    }
    return out;
}

std::vector<double> speed_series(std::span<const VelocityVector> vels) {
    std::vector<double> out;
    out.reserve(vels.size());
    for (const auto& v : vels) out.push_back(v.speed);
    return out;
}

std::vector<VelocityVector> velocities_from_series(std::span<const double> speeds,
                                                   std::span<const double> degrees) {
    if (speeds.size() != degrees.size()) {
        throw std::invalid_argument("velocities_from_series: length mismatch");
    }
    std::vector<VelocityVector> out;
    out.reserve(speeds.size());
    for (std::size_t i = 0; i < speeds.size(); ++i) {
        VelocityVector v;
        v.speed = std::max(0.0, speeds[i]);
        v.degree = wrap_degree(degrees[i]);
        v.zero_displacement = v.speed == 0.0;
        out.push_back(v);
    }
    return out;
}

}  // namespace pcra
