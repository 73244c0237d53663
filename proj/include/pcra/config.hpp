// SPDX-License-Identifier: Apache-2.0
//
// Per-site configuration shared by every pipeline stage.

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcra/risk.hpp"

namespace pcra {

struct SiteConfig {
    std::string site_id{"site-a"};
    ZoneGrid roi{0.0, 0.0, 60.0, 20.0, 12};
    double sample_rate_hz{5.0};
    std::vector<int> horizons_s{1, 2, 3};
    double alpha{0.05};
    int smoothing_window{3};
    std::size_t n_min{20};
    int arc_segments{32};
    std::uint64_t seed{0};
    double train_fraction{0.7};

    // reporting only: scene units -> meters
    double meters_per_unit{1.0};

    // catalog model per (class, feature)
    std::string vehicle_speed_model{"Deep-TP-3-10"};
    std::string vehicle_degree_model{"Deep-TP-3-10"};
    std::string pedestrian_speed_model{"Deep-TP-3-10"};
    std::string pedestrian_degree_model{"Deep-TP-3-10"};

    /// Throws std::invalid_argument when horizons are not whole numbers of
    /// sampling steps, alpha is outside (0,1), or the RoI is degenerate.
    void validate() const {
        roi.validate();
        if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("SiteConfig: alpha must be in (0,1)");
        if (sample_rate_hz <= 0.0) throw std::invalid_argument("SiteConfig: sample rate must be positive");
        if (smoothing_window < 1) throw std::invalid_argument("SiteConfig: smoothing window must be >= 1");
        if (arc_segments < 2) throw std::invalid_argument("SiteConfig: arc_segments must be >= 2");
        if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
            throw std::invalid_argument("SiteConfig: train_fraction must be in (0,1)");
        }
        if (horizons_s.empty()) throw std::invalid_argument("SiteConfig: no horizons");
        for (int h : horizons_s) {
            if (h <= 0) throw std::invalid_argument("SiteConfig: horizons must be positive");
            const double steps = static_cast<double>(h) * sample_rate_hz;
            if (std::abs(steps - std::round(steps)) > 1e-9) {
                throw std::invalid_argument("SiteConfig: horizon " + std::to_string(h) +
                                            " s is not a whole number of sampling steps");
            }
        }
    }
};

}  // namespace pcra
