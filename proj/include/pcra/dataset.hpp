// SPDX-License-Identifier: Apache-2.0
//
// Training material out of ingested scenes: per-feature series extraction,
// min-max normalization bookkeeping, sliding-window samples, and
// deterministic scene-level train/test splits.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pcra/trajectory.hpp"

namespace pcra {

struct MinMaxScaler {
    double min{0.0};
    double max{1.0};

    [[nodiscard]] double normalize(double x) const { return (x - min) / (max - min); }
    [[nodiscard]] double denormalize(double u) const { return min + u * (max - min); }
    /// Normalize and clamp into [0,1]; used for values outside the training
    /// extrema.
    [[nodiscard]] double normalize_clamped(double x) const;
};

/// Extrema of a sample set. Throws on fewer than 2 distinct values.
MinMaxScaler fit_scaler(std::span<const double> samples);

struct WindowSample {
    std::string scene_id;
    Feature feature{Feature::Speed};
    ObjectClass object_class{ObjectClass::Vehicle};
    std::vector<double> window;  // normalized, length = sliding window
    double target{0.0};          // normalized
};

struct SplitSpec {
    double train_fraction{0.7};
    std::uint64_t seed{0};
    bool chronological{false};  // keep input order instead of shuffling
};

/// Scene-level partition: train gets ceil(fraction * n), test the rest.
/// Deterministic given the seed; no scene appears in both halves.
std::pair<std::vector<Scene>, std::vector<Scene>> split_scenes(std::span<const Scene> scenes,
                                                               const SplitSpec& spec);

/// The feature series of one trajectory: per-step speeds, or per-step
/// bearings unwrapped for continuity (zero-displacement steps carry the
/// previous bearing).
std::vector<double> feature_series(const Trajectory& traj, Feature feature);

/// Pool the feature series of every scene of the class and fit a scaler.
MinMaxScaler fit_feature_scaler(std::span<const Scene> scenes, Feature feature,
                                ObjectClass object_class);

struct WindowExtraction {
    std::vector<WindowSample> samples;
    std::size_t short_trajectories{0};  // contributed zero samples
};

/// Every contiguous (window, next value) pair from each trajectory of the
/// class, normalized with the given scaler (clamped outside its range).
WindowExtraction extract_windows(std::span<const Scene> scenes, Feature feature,
                                 ObjectClass object_class, int window,
                                 const MinMaxScaler& scaler);

}  // namespace pcra
