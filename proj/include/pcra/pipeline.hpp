// SPDX-License-Identifier: Apache-2.0
//
// Stage orchestration shared by the CLI and the end-to-end tests: training
// the four per-site networks, evaluating them, and running assessment over
// a prepared corpus.

#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pcra/config.hpp"
#include "pcra/io.hpp"
#include "pcra/severity.hpp"

namespace pcra {

struct TrainedSite {
    SiteModels models;
    // (tag, per-epoch loss), tag e.g. "vehicle_speed"
    std::vector<std::pair<std::string, std::vector<double>>> loss_curves;
};

/// Fit scalers on the training corpus, then train one network per
/// (class, feature) with the configured catalog entries. Deterministic
/// given config.seed.
TrainedSite train_site_models(std::span<const Scene> train_scenes, const SiteConfig& config);

/// Trajectory-level MSE rows for the four networks over a test corpus.
std::vector<EvalRow> evaluate_site(const SiteModels& models, std::span<const Scene> test_scenes,
                                   double preceding_fraction = 2.0 / 3.0);

}  // namespace pcra
