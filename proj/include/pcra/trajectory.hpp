// SPDX-License-Identifier: Apache-2.0
//
// Canonical trajectory representations: time-stamped point sequences, their
// (speed, degree) velocity decomposition, and the conversions, smoothing and
// displacement extraction shared by the rest of the pipeline.
//
// Bearing convention: degrees measured from the +y axis, clockwise toward
// +x, so a unit step at bearing d is (sin d, cos d). Degrees are kept in
// [0, 360) except where a series has been unwrapped for continuity.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pcra {

enum class ObjectClass { Vehicle, Pedestrian };

/// The two components of the velocity decomposition.
enum class Feature { Speed, Degree };

const char* to_string(ObjectClass c);
const char* to_string(Feature f);
ObjectClass object_class_from_string(const std::string& s);
Feature feature_from_string(const std::string& s);

struct Point {
    double x{0.0};
    double y{0.0};

    friend bool operator==(const Point&, const Point&) = default;
};

/// Per-step displacement decomposed into magnitude ("speed") and bearing
/// ("degree"). A zero-length step has no defined bearing; it is reported as
/// 0 with the flag set so downstream consumers may skip it.
struct VelocityVector {
    double speed{0.0};
    double degree{0.0};
    bool zero_displacement{false};
};

struct TrajectorySample {
    double time_s{0.0};
    Point point;
};

struct Trajectory {
    ObjectClass object_class{ObjectClass::Vehicle};
    std::vector<TrajectorySample> samples;

    [[nodiscard]] std::size_t size() const { return samples.size(); }
    [[nodiscard]] bool empty() const { return samples.empty(); }
    [[nodiscard]] const Point& point(std::size_t i) const { return samples[i].point; }
    [[nodiscard]] double time(std::size_t i) const { return samples[i].time_s; }

    /// Uniform sampling interval; valid after resampling.
    [[nodiscard]] double step_seconds() const;

    /// throws std::invalid_argument when timestamps are not strictly
    /// increasing or fewer than 2 samples are present.
    void validate() const;
};

/// One interactive episode: exactly one vehicle and one pedestrian with
/// non-empty overlapping time support.
struct Scene {
    std::string scene_id;
    Trajectory vehicle;
    Trajectory pedestrian;

    [[nodiscard]] bool time_supports_overlap() const;
};

/// Normalize an angle in degrees into [0, 360).
double wrap_degree(double degree);

/// Bearing of the displacement (dx, dy) in degrees from +y, clockwise.
double bearing_of(double dx, double dy);

/// Unit direction of a bearing: (sin d, cos d).
Point direction_of(double degree);

/// Decompose consecutive points into m-1 velocity vectors.
std::vector<VelocityVector> points_to_velocities(std::span<const Point> points);
std::vector<VelocityVector> points_to_velocities(const Trajectory& traj);

/// Reconstruct points from a start point and velocity vectors; one output
/// point per input vector.
std::vector<Point> velocities_to_points(Point start, std::span<const VelocityVector> vels);

/// Centered moving average with shrinking windows at the boundaries. Output
/// length equals input length. window must satisfy 1 <= window <= size.
std::vector<double> low_pass_smooth(std::span<const double> series, int window);

/// Translate each trajectory so its first point is the origin.
std::vector<Trajectory> shift_to_common_origin(std::span<const Trajectory> trajs);

/// Net displacement from sample t_index over the given horizon, as a
/// (magnitude, bearing) vector. nullopt when the trajectory ends before
/// t + horizon. Requires the horizon to be a whole number of sampling steps.
std::optional<VelocityVector> displacement_over_horizon(const Trajectory& traj,
                                                        std::size_t t_index,
                                                        double horizon_s);

/// Resample onto the uniform grid k / rate_hz (grid-aligned, linear
/// interpolation between source samples). Throws when fewer than two grid
/// points fall inside the trajectory's support.
Trajectory resample(const Trajectory& traj, double rate_hz);

/// Remove artificial 360-degree jumps: each value is shifted by a multiple
/// of 360 to lie within 180 of its predecessor. Zero-displacement bearings
/// carry the previous valid bearing forward before unwrapping.
std::vector<double> unwrap_degrees(std::span<const VelocityVector> vels);

/// Speed component of a velocity sequence.
std::vector<double> speed_series(std::span<const VelocityVector> vels);

/// Rebuild velocity vectors from (possibly smoothed) speed and unwrapped
/// degree series. Negative speeds are clamped to zero.
std::vector<VelocityVector> velocities_from_series(std::span<const double> speeds,
                                                   std::span<const double> degrees);

}  // namespace pcra
