// SPDX-License-Identifier: Apache-2.0
//
// pcra: end-to-end pipeline driver.
//
//   pcra simulate    generate a synthetic corpus (trajectories.csv + labels.json)
//   pcra ingest      validate/resample/smooth a trajectory CSV into scenes.json
//   pcra train       train the four per-site networks, write checkpoints + split
//   pcra eval        trajectory-level test MSE table
//   pcra build-dists build zone/horizon displacement distributions
//   pcra assess      assess scenes, write per-scene records + count table
//   pcra report      print the evaluation and count tables from saved artifacts
//   pcra render      render one assessed scene to SVG

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pcra/io.hpp"
#include "pcra/kernels.hpp"
#include "pcra/pipeline.hpp"
#include "pcra/simulate.hpp"
#include "pcra/svg.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kSplitVersion = "pcra-split-v1";

struct GlobalOpts {
    std::string config_path;
    std::string out_dir{"out"};
    std::optional<std::uint64_t> seed;
    std::optional<double> alpha;
    std::optional<int> zones;
    std::optional<std::vector<int>> horizons;
};

pcra::SiteConfig resolve_config(const GlobalOpts& g) {
    pcra::SiteConfig config;
    if (!g.config_path.empty()) config = pcra::load_site_config(g.config_path);
    if (g.seed) config.seed = *g.seed;
    if (g.alpha) config.alpha = *g.alpha;
    if (g.zones) config.roi.n_zones = *g.zones;
    if (g.horizons) config.horizons_s = *g.horizons;
    config.validate();
    return config;
}

void add_global_opts(CLI::App* cmd, GlobalOpts& g) {
    cmd->add_option("--config", g.config_path, "site config JSON");
    cmd->add_option("--out", g.out_dir, "output directory");
    cmd->add_option("--seed", g.seed, "override config seed");
    cmd->add_option("--alpha", g.alpha, "override config alpha");
    cmd->add_option("--zones", g.zones, "override zone count");
    cmd->add_option("--horizons", g.horizons, "override horizons (seconds)")->delimiter(',');
}

void save_split(const std::string& path, std::span<const pcra::Scene> train,
                std::span<const pcra::Scene> test) {
    json train_ids = json::array();
    json test_ids = json::array();
    for (const auto& s : train) train_ids.push_back(s.scene_id);
    for (const auto& s : test) test_ids.push_back(s.scene_id);
    pcra::write_text_file(
        path, json{{"version", kSplitVersion}, {"train", train_ids}, {"test", test_ids}}.dump(2) + "\n");
}

std::pair<std::vector<pcra::Scene>, std::vector<pcra::Scene>> load_split(
    const std::string& path, std::span<const pcra::Scene> scenes) {
    json j = json::parse(pcra::read_text_file(path));
    if (j.value("version", "") != kSplitVersion) {
        throw std::runtime_error(path + ": version mismatch (expected " +
                                 std::string(kSplitVersion) + ")");
    }
    auto pick = [&](const json& ids) {
        std::vector<pcra::Scene> out;
        for (const auto& id : ids) {
            const std::string want = id.get<std::string>();
            for (const auto& s : scenes) {
                if (s.scene_id == want) {
                    out.push_back(s);
                    break;
                }
            }
        }
        return out;
    };
    return {pick(j.at("train")), pick(j.at("test"))};
}

pcra::SiteModels load_site_models(const std::string& dir) {
    pcra::SiteModels m;
    m.vehicle_speed = pcra::load_model(dir + "/vehicle_speed.json");
    m.vehicle_degree = pcra::load_model(dir + "/vehicle_degree.json");
    m.pedestrian_speed = pcra::load_model(dir + "/pedestrian_speed.json");
    m.pedestrian_degree = pcra::load_model(dir + "/pedestrian_degree.json");
    return m;
}

int run(int argc, char** argv) {
    CLI::App app{"predictive collision risk area pipeline"};
    app.require_subcommand(1);

    GlobalOpts g;

    // simulate
    auto* sim_cmd = app.add_subcommand("simulate", "generate a synthetic corpus");
    std::size_t sim_scenes = 200;
    double sim_gap_max = 8.0;
    double sim_noise = 0.05;
    add_global_opts(sim_cmd, g);
    sim_cmd->add_option("--scenes", sim_scenes, "number of scenes");
    sim_cmd->add_option("--gap-max", sim_gap_max, "max |arrival gap| in seconds");
    sim_cmd->add_option("--noise", sim_noise, "positional noise amplitude");

    // ingest
    auto* ingest_cmd = app.add_subcommand("ingest", "prepare a trajectory CSV");
    std::string ingest_csv;
    add_global_opts(ingest_cmd, g);
    ingest_cmd->add_option("--csv", ingest_csv, "trajectory CSV path")->required();

    // train
    auto* train_cmd = app.add_subcommand("train", "train the four site networks");
    std::string train_scenes_path;
    add_global_opts(train_cmd, g);
    train_cmd->add_option("--scenes", train_scenes_path, "prepared scenes.json");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "trajectory-level test MSE");
    std::string eval_scenes_path;
    std::string eval_models_dir;
    std::string eval_split_path;
    add_global_opts(eval_cmd, g);
    eval_cmd->add_option("--scenes", eval_scenes_path, "prepared scenes.json");
    eval_cmd->add_option("--models", eval_models_dir, "models directory");
    eval_cmd->add_option("--split", eval_split_path, "split.json (evaluates the test half)");

    // build-dists
    auto* dists_cmd = app.add_subcommand("build-dists", "build displacement distributions");
    std::string dists_scenes_path;
    std::string dists_split_path;
    add_global_opts(dists_cmd, g);
    dists_cmd->add_option("--scenes", dists_scenes_path, "prepared scenes.json");
    dists_cmd->add_option("--split", dists_split_path, "split.json (uses the train half)");

    // assess
    auto* assess_cmd = app.add_subcommand("assess", "assess scenes");
    std::string assess_scenes_path;
    std::string assess_models_dir;
    std::string assess_dists_path;
    std::string assess_split_path;
    bool assess_all = false;
    add_global_opts(assess_cmd, g);
    assess_cmd->add_option("--scenes", assess_scenes_path, "prepared scenes.json");
    assess_cmd->add_option("--models", assess_models_dir, "models directory");
    assess_cmd->add_option("--dists", assess_dists_path, "dists.json");
    assess_cmd->add_option("--split", assess_split_path, "split.json (assesses the test half)");
    assess_cmd->add_flag("--all-scenes", assess_all, "assess every scene, ignoring the split");

    // report
    auto* report_cmd = app.add_subcommand("report", "print saved report tables");
    add_global_opts(report_cmd, g);

    // render
    auto* render_cmd = app.add_subcommand("render", "render one scene to SVG");
    std::string render_scene_id;
    std::string render_scenes_path;
    std::string render_assess_path;
    std::string render_out;
    std::optional<double> render_time;
    add_global_opts(render_cmd, g);
    render_cmd->add_option("--scene-id", render_scene_id, "scene to render")->required();
    render_cmd->add_option("--scenes", render_scenes_path, "prepared scenes.json");
    render_cmd->add_option("--assessments", render_assess_path, "assessments.jsonl");
    render_cmd->add_option("--svg", render_out, "output SVG path");
    render_cmd->add_option("--time", render_time, "timestep to draw (seconds)");

    CLI11_PARSE(app, argc, argv);

    const auto out_dir = fs::path(g.out_dir);
    fs::create_directories(out_dir);
    pcra::SiteConfig config = resolve_config(g);

    auto default_path = [&](const std::string& provided, const char* name) {
        return provided.empty() ? (out_dir / name).string() : provided;
    };

    if (sim_cmd->parsed()) {
        pcra::SimSpec spec;
        spec.scene_count = sim_scenes;
        spec.gap_abs_max = sim_gap_max;
        spec.noise_amplitude = sim_noise;
        spec.seed = config.seed;
        auto result = pcra::simulate(spec, config);
        pcra::write_trajectory_csv((out_dir / "trajectories.csv").string(), result.scenes);
        pcra::save_labels((out_dir / "labels.json").string(), result.labels);
        std::cout << "simulate: " << result.scenes.size() << " scenes -> "
                  << (out_dir / "trajectories.csv").string() << "\n";
        return 0;
    }

    if (ingest_cmd->parsed()) {
        auto prepared = pcra::ingest(ingest_csv, config);
        pcra::save_scenes((out_dir / "scenes.json").string(), prepared.scenes);
        std::cout << "ingest: " << prepared.stats.scenes_in << " scenes in, "
                  << prepared.stats.scenes_kept << " kept, " << prepared.stats.dropped_invalid
                  << " invalid, " << prepared.stats.dropped_non_interactive
                  << " non-interactive\n";
        for (const auto& id : prepared.stats.rejected_scene_ids) {
            std::cout << "  rejected: " << id << "\n";
        }
        return 0;
    }

    if (train_cmd->parsed()) {
        auto scenes = pcra::load_scenes(default_path(train_scenes_path, "scenes.json"));
        auto [train_half, test_half] =
            pcra::split_scenes(scenes, {config.train_fraction, config.seed, false});
        auto trained = pcra::train_site_models(train_half, config);
        fs::create_directories(out_dir / "models");
        pcra::save_model((out_dir / "models/vehicle_speed.json").string(),
                         trained.models.vehicle_speed);
        pcra::save_model((out_dir / "models/vehicle_degree.json").string(),
                         trained.models.vehicle_degree);
        pcra::save_model((out_dir / "models/pedestrian_speed.json").string(),
                         trained.models.pedestrian_speed);
        pcra::save_model((out_dir / "models/pedestrian_degree.json").string(),
                         trained.models.pedestrian_degree);
        save_split((out_dir / "split.json").string(), train_half, test_half);
        pcra::write_loss_csv((out_dir / "loss_curves.csv").string(), trained.loss_curves);
        std::cout << "train: " << train_half.size() << " train / " << test_half.size()
                  << " test scenes, kernels=" << pcra::kernels::backend_name(pcra::kernels::active_backend())
                  << "\n";
        for (const auto& [tag, losses] : trained.loss_curves) {
            std::cout << "  " << tag << ": final epoch loss " << losses.back() << "\n";
        }
        return 0;
    }

    if (eval_cmd->parsed()) {
        auto scenes = pcra::load_scenes(default_path(eval_scenes_path, "scenes.json"));
        auto models = load_site_models(default_path(eval_models_dir, "models"));
        std::vector<pcra::Scene> subject = scenes;
        const std::string split_path = default_path(eval_split_path, "split.json");
        if (fs::exists(split_path)) {
            subject = load_split(split_path, scenes).second;
        }
        auto rows = pcra::evaluate_site(models, subject);
        const std::string table = pcra::format_eval_table(config.site_id, rows);
        pcra::write_text_file((out_dir / "eval_table.txt").string(), table);
        pcra::write_text_file((out_dir / "eval_report.json").string(),
                              pcra::eval_report_json(config.site_id, rows).dump(2) + "\n");
        std::cout << table;
        return 0;
    }

    if (dists_cmd->parsed()) {
        auto scenes = pcra::load_scenes(default_path(dists_scenes_path, "scenes.json"));
        std::vector<pcra::Scene> subject = scenes;
        const std::string split_path = default_path(dists_split_path, "split.json");
        if (fs::exists(split_path)) {
            subject = load_split(split_path, scenes).first;
        }
        auto store = pcra::build_distributions(subject, config.roi, config.horizons_s, config.alpha,
                                               config.n_min);
        pcra::save_dist_store((out_dir / "dists.json").string(), store);
        std::size_t usable = 0;
        std::size_t empty = 0;
        for (const auto& cell : store.coverage()) {
            if (cell.usable) ++usable;
            if (cell.count == 0) ++empty;
        }
        std::cout << "build-dists: " << subject.size() << " scenes, " << usable
                  << " usable cells, " << empty << " empty cells -> "
                  << (out_dir / "dists.json").string() << "\n";
        return 0;
    }

    if (assess_cmd->parsed()) {
        auto scenes = pcra::load_scenes(default_path(assess_scenes_path, "scenes.json"));
        auto models = load_site_models(default_path(assess_models_dir, "models"));
        auto store = pcra::load_dist_store(default_path(assess_dists_path, "dists.json"));
        std::vector<pcra::Scene> subject = scenes;
        const std::string split_path = default_path(assess_split_path, "split.json");
        if (!assess_all && fs::exists(split_path)) {
            subject = load_split(split_path, scenes).second;
        }
        auto assessments = pcra::assess_corpus(subject, models, store, config.roi, config.alpha,
                                               {config.arc_segments});
        pcra::write_assessments_jsonl((out_dir / "assessments.jsonl").string(), assessments);
        const auto counts = pcra::aggregate_corpus(assessments);
        const std::string table = pcra::format_counts_table(config.site_id, counts);
        pcra::write_text_file((out_dir / "counts_table.txt").string(), table);
        pcra::write_text_file((out_dir / "counts_report.json").string(),
                              pcra::counts_report_json(config.site_id, counts).dump(2) + "\n");
        std::cout << table;
        return 0;
    }

    if (report_cmd->parsed()) {
        bool printed = false;
        const auto eval_path = out_dir / "eval_table.txt";
        if (fs::exists(eval_path)) {
            std::cout << pcra::read_text_file(eval_path.string()) << "\n";
            printed = true;
        }
        const auto counts_path = out_dir / "counts_table.txt";
        if (fs::exists(counts_path)) {
            std::cout << pcra::read_text_file(counts_path.string());
            printed = true;
        }
        if (!printed) {
            throw std::runtime_error("report: no eval_table.txt or counts_table.txt under " +
                                     out_dir.string() + " (run eval/assess first)");
        }
        return 0;
    }

    if (render_cmd->parsed()) {
        auto scenes = pcra::load_scenes(default_path(render_scenes_path, "scenes.json"));
        auto assessments =
            pcra::read_assessments_jsonl(default_path(render_assess_path, "assessments.jsonl"));
        const pcra::Scene* scene = nullptr;
        const pcra::SceneAssessment* assessment = nullptr;
        for (const auto& s : scenes) {
            if (s.scene_id == render_scene_id) scene = &s;
        }
        for (const auto& a : assessments) {
            if (a.scene_id == render_scene_id) assessment = &a;
        }
        if (scene == nullptr) throw std::runtime_error("render: scene '" + render_scene_id + "' not found");
        if (assessment == nullptr) {
            throw std::runtime_error("render: no assessment for scene '" + render_scene_id + "'");
        }
        const std::string svg_path =
            render_out.empty() ? (out_dir / (render_scene_id + ".svg")).string() : render_out;
        pcra::render_scene(*assessment, *scene, config, svg_path, render_time);
        std::cout << "render: " << svg_path << "\n";
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << json{{"error", {{"message", e.what()}}}}.dump() << std::endl;
        return 1;
    }
}
