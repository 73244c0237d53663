// SPDX-License-Identifier: Apache-2.0

#include "pcra/risk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pcra {

bool ZoneGrid::contains(const Point& p) const {
    return p.x >= x_min && p.x < x_max && p.y >= y_min && p.y < y_max;
}

std::optional<int> ZoneGrid::assign_zone(ObjectClass object_class, const Point& p) const {
    if (!contains(p)) return std::nullopt;
    double lo;
    double span;
    double v;
    if (object_class == ObjectClass::Vehicle) {
        lo = x_min;
        span = x_max - x_min;
        v = p.x;
    } else {
        lo = y_min;
        span = y_max - y_min;
        v = p.y;
    }
    int idx = static_cast<int>(std::floor((v - lo) / span * n_zones));
    idx = std::clamp(idx, 0, n_zones - 1);  // last interval closed
    return idx + 1;
}

void ZoneGrid::validate() const {
    if (!(x_min < x_max && y_min < y_max)) throw std::invalid_argument("ZoneGrid: degenerate RoI");
    if (n_zones < 1) throw std::invalid_argument("ZoneGrid: n_zones must be positive");
}

DistStore::DistStore(ZoneGrid grid, std::vector<int> horizons_s, double alpha, std::size_t n_min)
    : grid_(grid), horizons_s_(std::move(horizons_s)), alpha_(alpha), n_min_(n_min) {
    grid_.validate();
    if (!(alpha_ > 0.0 && alpha_ < 1.0)) throw std::invalid_argument("DistStore: alpha must be in (0,1)");
    if (horizons_s_.empty()) throw std::invalid_argument("DistStore: no horizons");
}

void DistStore::add_sample(const DistKey& key, double value) {
    if (frozen_) throw std::logic_error("DistStore: add_sample after freeze");
    auto [it, inserted] = cells_.try_emplace(key);
    if (inserted) it->second.key = key;
    it->second.samples.push_back(value);
}

void DistStore::freeze() {
    for (auto& [key, dist] : cells_) std::sort(dist.samples.begin(), dist.samples.end());
    frozen_ = true;
}

const EmpiricalDist* DistStore::find(const DistKey& key) const {
    auto it = cells_.find(key);
    return it == cells_.end() ? nullptr : &it->second;
}

const EmpiricalDist* DistStore::find_usable(const DistKey& key) const {
    const EmpiricalDist* d = find(key);
    return (d != nullptr && d->usable(n_min_)) ? d : nullptr;
}

std::vector<CoverageCell> DistStore::coverage() const {
    std::vector<CoverageCell> out;
    for (Feature feature : {Feature::Speed, Feature::Degree}) {
        for (ObjectClass cls : {ObjectClass::Vehicle, ObjectClass::Pedestrian}) {
            for (int zone = 1; zone <= grid_.n_zones; ++zone) {
                for (int h : horizons_s_) {
                    DistKey key{feature, cls, zone, h};
                    const EmpiricalDist* d = find(key);
                    const std::size_t count = d != nullptr ? d->n() : 0;
                    out.push_back({key, count, count >= n_min_});
                }
            }
        }
    }
    return out;
}

DistStore build_distributions(std::span<const Scene> scenes, const ZoneGrid& grid,
                              std::span<const int> horizons_s, double alpha, std::size_t n_min) {
    DistStore store(grid, {horizons_s.begin(), horizons_s.end()}, alpha, n_min);
    for (const auto& scene : scenes) {
        for (const Trajectory* traj : {&scene.vehicle, &scene.pedestrian}) {
            const ObjectClass cls = traj->object_class;
            for (std::size_t t = 0; t < traj->size(); ++t) {
                auto zone = grid.assign_zone(cls, traj->point(t));
                if (!zone) continue;
                for (int h : horizons_s) {
                    auto disp = displacement_over_horizon(*traj, t, static_cast<double>(h));
                    if (!disp) continue;
                    store.add_sample({Feature::Speed, cls, *zone, h}, disp->speed);
                    if (!disp->zero_displacement) {
                        store.add_sample({Feature::Degree, cls, *zone, h}, disp->degree);
                    }
                }
            }
        }
    }
    store.freeze();
    return store;
}

PcraSector build_pcra(const Point& current, const VelocityVector& predicted,
                      const EmpiricalDist& speed_dist, const EmpiricalDist& degree_dist,
                      double alpha, std::size_t n_min) {
    if (!speed_dist.usable(n_min) || !degree_dist.usable(n_min)) {
        throw std::invalid_argument("build_pcra: distribution below usability threshold for " +
                                    speed_dist.key.to_string());
    }

    // Speed: recenter at the predicted magnitude, clamp below zero.
    EmpiricalDist speed = recenter(speed_dist, predicted.speed);
    for (auto& s : speed.samples) s = std::max(0.0, s);
    const ValueBounds speed_bounds = band_bounds(speed, alpha);

    // Degree: map into the 360-degree window centered on the predicted
    // bearing so the band does not straddle the wraparound.
    EmpiricalDist degree;
    degree.key = degree_dist.key;
    degree.samples.reserve(degree_dist.samples.size());
    for (double d : degree_dist.samples) {
        double delta = d - predicted.degree;
        delta -= 360.0 * std::round(delta / 360.0);        // (-180, 180]
        degree.samples.push_back(predicted.degree + delta);
    }
    std::sort(degree.samples.begin(), degree.samples.end());
    degree = recenter(degree, predicted.degree);
    const ValueBounds degree_bounds = band_bounds(degree, alpha);

    PcraSector sector;
    sector.apex = current;
    sector.radius = std::max(0.0, speed_bounds.hi);
    sector.theta_lo = degree_bounds.lo;
    sector.theta_hi = degree_bounds.hi;
    if (sector.width() > 360.0) {
        sector.theta_lo = predicted.degree - 180.0;
        sector.theta_hi = predicted.degree + 180.0;
    }
    return sector;
}

}  // namespace pcra
