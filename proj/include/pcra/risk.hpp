// SPDX-License-Identifier: Apache-2.0
//
// Zone-indexed empirical distributions of displacement magnitude/bearing
// over the prediction horizons, and construction of sector-shaped
// predictive collision risk areas from recentered DKW band bounds.

#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "pcra/stats.hpp"
#include "pcra/trajectory.hpp"

namespace pcra {

/// Equal split of the region of interest along the class travel axis:
/// horizontal (x) zones for vehicles, vertical (y) zones for pedestrians.
/// Intervals are half-open; the last one is closed.
struct ZoneGrid {
    double x_min{0.0};
    double y_min{0.0};
    double x_max{1.0};
    double y_max{1.0};
    int n_zones{12};

    [[nodiscard]] bool contains(const Point& p) const;
    /// 1-based zone index, or nullopt when the point is outside the RoI.
    [[nodiscard]] std::optional<int> assign_zone(ObjectClass object_class, const Point& p) const;

    void validate() const;
};

/// Sector-shaped risk area: apex at the current position, radius from the
/// speed upper bound, angular interval from the degree bounds. theta values
/// follow the bearing convention and may exceed [0, 360) before wrapping;
/// width = theta_hi - theta_lo is clamped to 360.
struct PcraSector {
    Point apex;
    double radius{0.0};
    double theta_lo{0.0};
    double theta_hi{0.0};

    [[nodiscard]] double width() const { return theta_hi - theta_lo; }
};

struct CoverageCell {
    DistKey key;
    std::size_t count{0};
    bool usable{false};
};

/// Frozen map from DistKey to its empirical distribution. Immutable after
/// build; safe for concurrent reads.
class DistStore {
public:
    DistStore() = default;
    DistStore(ZoneGrid grid, std::vector<int> horizons_s, double alpha, std::size_t n_min);

    void add_sample(const DistKey& key, double value);
    /// Sorts all cells; call once after the last add_sample.
    void freeze();

    [[nodiscard]] const EmpiricalDist* find(const DistKey& key) const;
    /// nullptr when missing or below the usability threshold.
    [[nodiscard]] const EmpiricalDist* find_usable(const DistKey& key) const;

    [[nodiscard]] const ZoneGrid& grid() const { return grid_; }
    [[nodiscard]] std::span<const int> horizons_s() const { return horizons_s_; }
    [[nodiscard]] double alpha() const { return alpha_; }
    [[nodiscard]] std::size_t n_min() const { return n_min_; }
    [[nodiscard]] const std::map<DistKey, EmpiricalDist>& cells() const { return cells_; }

    /// Every (feature, class, zone, horizon) cell with its sample count,
    /// including empty ones.
    [[nodiscard]] std::vector<CoverageCell> coverage() const;

private:
    ZoneGrid grid_;
    std::vector<int> horizons_s_{1, 2, 3};
    double alpha_{0.05};
    std::size_t n_min_{20};
    bool frozen_{false};
    std::map<DistKey, EmpiricalDist> cells_;
};

/// Walk every in-RoI timestep of every trajectory, extract the net
/// displacement over each horizon, and bucket magnitudes/bearings by the
/// zone the object currently occupies. Bearings of zero-length
/// displacements are excluded from Degree cells.
DistStore build_distributions(std::span<const Scene> scenes, const ZoneGrid& grid,
                              std::span<const int> horizons_s, double alpha, std::size_t n_min);

/// PCRA from the (zone, horizon) distributions, recentered at the predicted
/// displacement. Degree samples are first mapped into the 360-degree window
/// centered on the predicted bearing; speed samples shifted below zero are
/// clamped at zero. Throws when either distribution is unusable.
PcraSector build_pcra(const Point& current, const VelocityVector& predicted,
                      const EmpiricalDist& speed_dist, const EmpiricalDist& degree_dist,
                      double alpha, std::size_t n_min);

}  // namespace pcra
