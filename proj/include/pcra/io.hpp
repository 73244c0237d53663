// SPDX-License-Identifier: Apache-2.0
//
// File formats: trajectory CSV ingestion, versioned JSON artifacts (models,
// distribution stores, labels, assessments, reports), and the aligned-column
// report tables.

#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "pcra/config.hpp"
#include "pcra/lstm.hpp"
#include "pcra/risk.hpp"
#include "pcra/severity.hpp"
#include "pcra/simulate.hpp"
#include "pcra/trajectory.hpp"

namespace pcra {

inline constexpr const char* kModelVersion = "pcra-model-v1";
inline constexpr const char* kDistsVersion = "pcra-dists-v1";
inline constexpr const char* kScenesVersion = "pcra-scenes-v1";
inline constexpr const char* kLabelsVersion = "pcra-labels-v1";
inline constexpr const char* kReportVersion = "pcra-report-v1";

// --- trajectory CSV ---------------------------------------------------------

/// Parse `scene_id,object_id,class,frame,time_s,x,y`. Throws on malformed
/// rows (message carries the line number) and on empty files. Scenes with
/// duplicate classes are rejected.
std::vector<Scene> read_trajectory_csv(const std::string& path);

void write_trajectory_csv(const std::string& path, std::span<const Scene> scenes);

// --- ingestion --------------------------------------------------------------

struct IngestStats {
    std::size_t scenes_in{0};
    std::size_t scenes_kept{0};
    std::size_t dropped_invalid{0};          // non-monotone timestamps, too short
    std::size_t dropped_non_interactive{0};  // no overlapping time support
    std::vector<std::string> rejected_scene_ids;
};

struct PreparedCorpus {
    std::vector<Scene> scenes;
    IngestStats stats;
};

/// Resample to the configured rate, keep interactive scenes only, and
/// low-pass the speed/degree series of both trajectories.
PreparedCorpus prepare_scenes(std::span<const Scene> raw, const SiteConfig& config);

/// read_trajectory_csv + prepare_scenes.
PreparedCorpus ingest(const std::string& csv_path, const SiteConfig& config);

// --- JSON artifacts ---------------------------------------------------------

nlohmann::json model_to_json(const LstmModel& model);
LstmModel model_from_json(const nlohmann::json& j);
void save_model(const std::string& path, const LstmModel& model);
LstmModel load_model(const std::string& path);

nlohmann::json dist_store_to_json(const DistStore& store);
DistStore dist_store_from_json(const nlohmann::json& j);
void save_dist_store(const std::string& path, const DistStore& store);
DistStore load_dist_store(const std::string& path);

nlohmann::json site_config_to_json(const SiteConfig& config);
SiteConfig site_config_from_json(const nlohmann::json& j);
SiteConfig load_site_config(const std::string& path);

void save_scenes(const std::string& path, std::span<const Scene> scenes);
std::vector<Scene> load_scenes(const std::string& path);

void save_labels(const std::string& path, std::span<const SceneLabel> labels);
std::vector<SceneLabel> load_labels(const std::string& path);

nlohmann::json assessment_to_json(const SceneAssessment& assessment);
/// JSON lines, one record per scene.
void write_assessments_jsonl(const std::string& path, std::span<const SceneAssessment> assessments);
std::vector<SceneAssessment> read_assessments_jsonl(const std::string& path);

// --- reports ----------------------------------------------------------------

struct EvalRow {
    std::string target_dataset;  // e.g. "Vehicle speed"
    std::string model_name;
    double test_mse{0.0};
    std::size_t evaluated{0};
    std::size_t skipped{0};
};

/// Aligned-column table with the model-evaluation column structure
/// (target spot / target dataset / model / test MSE).
std::string format_eval_table(const std::string& site_id, std::span<const EvalRow> rows);

/// Aligned-column table with the scene-count column structure
/// (target spot / total scenes / dangerous / warning) plus ratios.
std::string format_counts_table(const std::string& site_id, const CorpusCounts& counts);

nlohmann::json eval_report_json(const std::string& site_id, std::span<const EvalRow> rows);
nlohmann::json counts_report_json(const std::string& site_id, const CorpusCounts& counts);

/// Per-epoch training losses, one column per model: epoch,model,loss.
void write_loss_csv(const std::string& path,
                    std::span<const std::pair<std::string, std::vector<double>>> curves);

/// Read a whole file (helper for tests and the CLI).
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace pcra
