// SPDX-License-Identifier: Apache-2.0

#include "pcra/pipeline.hpp"

#include <stdexcept>

namespace pcra {

namespace {

struct NetworkSpec {
    ObjectClass object_class;
    Feature feature;
    const char* tag;
    std::uint64_t seed_offset;
};

constexpr NetworkSpec kNetworks[] = {
    {ObjectClass::Vehicle, Feature::Speed, "vehicle_speed", 1},
    {ObjectClass::Vehicle, Feature::Degree, "vehicle_degree", 2},
    {ObjectClass::Pedestrian, Feature::Speed, "pedestrian_speed", 3},
    {ObjectClass::Pedestrian, Feature::Degree, "pedestrian_degree", 4},
};

const std::string& catalog_name_for(const SiteConfig& config, const NetworkSpec& net) {
    if (net.object_class == ObjectClass::Vehicle) {
        return net.feature == Feature::Speed ? config.vehicle_speed_model
                                             : config.vehicle_degree_model;
    }
    return net.feature == Feature::Speed ? config.pedestrian_speed_model
                                         : config.pedestrian_degree_model;
}

LstmModel& model_slot(SiteModels& models, const NetworkSpec& net) {
    if (net.object_class == ObjectClass::Vehicle) {
        return net.feature == Feature::Speed ? models.vehicle_speed : models.vehicle_degree;
    }
    return net.feature == Feature::Speed ? models.pedestrian_speed : models.pedestrian_degree;
}

}  // namespace

TrainedSite train_site_models(std::span<const Scene> train_scenes, const SiteConfig& config) {
    if (train_scenes.empty()) throw std::invalid_argument("train_site_models: no training scenes");
    TrainedSite out;
    for (const auto& net : kNetworks) {
        const auto scaler = fit_feature_scaler(train_scenes, net.feature, net.object_class);
        LstmModel model =
            model_from_catalog(catalog_name_for(config, net), config.seed + net.seed_offset);
        model.scaler = scaler;
        auto extraction =
            extract_windows(train_scenes, net.feature, net.object_class, model.config.window, scaler);
        if (extraction.samples.empty()) {
            throw std::runtime_error(std::string("train_site_models: no training windows for ") +
                                     net.tag);
        }
        std::vector<SequenceSample> samples;
        samples.reserve(extraction.samples.size());
        for (auto& ws : extraction.samples) {
            samples.push_back({std::move(ws.window), ws.target});
        }
        TrainResult tr = train(model, samples);
        out.loss_curves.emplace_back(net.tag, std::move(tr.epoch_loss));
        model_slot(out.models, net) = std::move(model);
    }
    return out;
}

std::vector<EvalRow> evaluate_site(const SiteModels& models, std::span<const Scene> test_scenes,
                                   double preceding_fraction) {
    std::vector<EvalRow> rows;
    for (ObjectClass cls : {ObjectClass::Vehicle, ObjectClass::Pedestrian}) {
        const LstmModel& speed = models.speed_of(cls);
        const LstmModel& degree = models.degree_of(cls);
        const TrajectoryEval eval =
            evaluate_trajectory_mse(speed, degree, test_scenes, cls, preceding_fraction);
        const std::string prefix = cls == ObjectClass::Vehicle ? "Vehicle" : "Pedestrian";
        rows.push_back({prefix + " speed", speed.config.name, eval.speed_mse, eval.evaluated,
                        eval.skipped});
        rows.push_back({prefix + " degree", degree.config.name, eval.degree_mse, eval.evaluated,
                        eval.skipped});
    }
    return rows;
}

}  // namespace pcra
