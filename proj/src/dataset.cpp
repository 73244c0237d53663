// SPDX-License-Identifier: Apache-2.0

#include "pcra/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pcra/rng.hpp"

namespace pcra {

double MinMaxScaler::normalize_clamped(double x) const {
    return std::clamp(normalize(x), 0.0, 1.0);
}

MinMaxScaler fit_scaler(std::span<const double> samples) {
    if (samples.size() < 2) throw std::invalid_argument("fit_scaler: need at least 2 samples");
    auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
    if (!(*lo < *hi)) throw std::invalid_argument("fit_scaler: degenerate sample set (all values equal)");
    return {*lo, *hi};
}

std::pair<std::vector<Scene>, std::vector<Scene>> split_scenes(std::span<const Scene> scenes,
                                                               const SplitSpec& spec) {
    if (scenes.empty()) throw std::invalid_argument("split_scenes: empty scene list");
    if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0)) {
        throw std::invalid_argument("split_scenes: train_fraction must be in (0,1)");
    }
    std::vector<std::size_t> order(scenes.size());
    std::iota(order.begin(), order.end(), 0);
    if (!spec.chronological) {
        Rng rng(spec.seed);
        rng.shuffle(order);
    }
    const auto n_train = static_cast<std::size_t>(
        std::ceil(spec.train_fraction * static_cast<double>(scenes.size()) - 1e-12));
    std::pair<std::vector<Scene>, std::vector<Scene>> out;
    out.first.reserve(n_train);
    out.second.reserve(scenes.size() - n_train);
    for (std::size_t i = 0; i < order.size(); ++i) {
        (i < n_train ? out.first : out.second).push_back(scenes[order[i]]);
    }
    return out;
}

std::vector<double> feature_series(const Trajectory& traj, Feature feature) {
    auto vels = points_to_velocities(traj);
    if (feature == Feature::Speed) return speed_series(vels);
    return unwrap_degrees(vels);
}

namespace {

const Trajectory& trajectory_of(const Scene& scene, ObjectClass c) {
    return c == ObjectClass::Vehicle ? scene.vehicle : scene.pedestrian;
}

}  // namespace

MinMaxScaler fit_feature_scaler(std::span<const Scene> scenes, Feature feature,
                                ObjectClass object_class) {
    std::vector<double> pool;
    for (const auto& scene : scenes) {
        auto series = feature_series(trajectory_of(scene, object_class), feature);
        pool.insert(pool.end(), series.begin(), series.end());
    }
    return fit_scaler(pool);
}

WindowExtraction extract_windows(std::span<const Scene> scenes, Feature feature,
                                 ObjectClass object_class, int window,
                                 const MinMaxScaler& scaler) {
    if (window < 1) throw std::invalid_argument("extract_windows: window must be >= 1");
    WindowExtraction out;
    const auto w = static_cast<std::size_t>(window);
    for (const auto& scene : scenes) {
        auto series = feature_series(trajectory_of(scene, object_class), feature);
        if (series.size() < w + 1) {
            ++out.short_trajectories;
            continue;
        }
        for (std::size_t i = 0; i + w < series.size(); ++i) {
            WindowSample s;
            s.scene_id = scene.scene_id;
            s.feature = feature;
            s.object_class = object_class;
            s.window.reserve(w);
            for (std::size_t j = 0; j < w; ++j) {
                s.window.push_back(scaler.normalize_clamped(series[i + j]));
            }
            s.target = scaler.normalize_clamped(series[i + w]);
            out.samples.push_back(std::move(s));
        }
    }
    return out;
}

}  // namespace pcra
