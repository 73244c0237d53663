// SPDX-License-Identifier: Apache-2.0

#include "pcra/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace pcra {

using nlohmann::json;

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double parse_double(const std::string& s, std::size_t line_no, const char* what) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": bad " + what + " value '" +
                                 s + "'");
    }
}

}  // namespace

std::vector<Scene> read_trajectory_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
    if (split_csv_line(line) != std::vector<std::string>{"scene_id", "object_id", "class", "frame",
                                                         "time_s", "x", "y"}) {
        throw std::runtime_error(path + ": unexpected CSV header '" + line + "'");
    }

    struct Key {
        std::string scene_id;
        ObjectClass cls;
        auto operator<=>(const Key&) const = default;
    };
    // preserve scene order of first appearance
    std::vector<std::string> scene_order;
    std::map<std::string, std::map<ObjectClass, Trajectory>> by_scene;
    std::map<std::string, std::map<ObjectClass, std::string>> object_ids;

    std::size_t line_no = 1;
    bool any_row = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != 7) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": expected 7 fields, got " +
                                     std::to_string(fields.size()));
        }
        any_row = true;
        const std::string& scene_id = fields[0];
        const std::string& object_id = fields[1];
        ObjectClass cls;
        try {
            cls = object_class_from_string(fields[2]);
        } catch (const std::exception&) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": bad class '" + fields[2] +
                                     "'");
        }
        const double time_s = parse_double(fields[4], line_no, "time_s");
        const double x = parse_double(fields[5], line_no, "x");
        const double y = parse_double(fields[6], line_no, "y");
        if (!std::isfinite(time_s) || !std::isfinite(x) || !std::isfinite(y)) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": non-finite value");
        }

        auto scene_it = by_scene.find(scene_id);
        if (scene_it == by_scene.end()) {
            scene_order.push_back(scene_id);
            scene_it = by_scene.emplace(scene_id, std::map<ObjectClass, Trajectory>{}).first;
        }
        auto& id_for = object_ids[scene_id][cls];
        if (id_for.empty()) {
            id_for = object_id;
        } else if (id_for != object_id) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": scene '" + scene_id +
                                     "' has multiple " + to_string(cls) + " objects");
        }
        auto& traj = scene_it->second[cls];
        traj.object_class = cls;
        traj.samples.push_back({time_s, {x, y}});
    }
    if (!any_row) throw std::runtime_error(path + ": no data rows");

    std::vector<Scene> scenes;
    scenes.reserve(scene_order.size());
    for (const auto& id : scene_order) {
        auto& parts = by_scene[id];
        if (!parts.contains(ObjectClass::Vehicle) || !parts.contains(ObjectClass::Pedestrian)) {
            throw std::runtime_error("scene '" + id + "' is missing a vehicle or pedestrian trajectory");
        }
        Scene s;
        s.scene_id = id;
        s.vehicle = std::move(parts[ObjectClass::Vehicle]);
        s.pedestrian = std::move(parts[ObjectClass::Pedestrian]);
        scenes.push_back(std::move(s));
    }
    return scenes;
}

void write_trajectory_csv(const std::string& path, std::span<const Scene> scenes) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "scene_id,object_id,class,frame,time_s,x,y\n";
    out << std::setprecision(17);
    for (const auto& scene : scenes) {
        int obj = 0;
        for (const Trajectory* traj : {&scene.vehicle, &scene.pedestrian}) {
            const std::string object_id = scene.scene_id + "-o" + std::to_string(obj++);
            std::size_t frame = 0;
            for (const auto& s : traj->samples) {
                out << scene.scene_id << ',' << object_id << ',' << to_string(traj->object_class)
                    << ',' << frame++ << ',' << s.time_s << ',' << s.point.x << ',' << s.point.y
                    << '\n';
            }
        }
    }
}

namespace {

Trajectory smooth_trajectory(const Trajectory& traj, int window) {
    auto vels = points_to_velocities(traj);
    const int w = std::min<int>(window, static_cast<int>(vels.size()));
    auto speeds = low_pass_smooth(speed_series(vels), w);
    auto degrees = low_pass_smooth(unwrap_degrees(vels), w);
    auto rebuilt = velocities_from_series(speeds, degrees);
    auto points = velocities_to_points(traj.point(0), rebuilt);

    Trajectory out;
    out.object_class = traj.object_class;
    out.samples.reserve(traj.size());
    out.samples.push_back(traj.samples.front());
    for (std::size_t i = 0; i < points.size(); ++i) {
        out.samples.push_back({traj.time(i + 1), points[i]});
    }
    return out;
}

}  // namespace

PreparedCorpus prepare_scenes(std::span<const Scene> raw, const SiteConfig& config) {
    config.validate();
    PreparedCorpus out;
    out.stats.scenes_in = raw.size();
    for (const auto& scene : raw) {
        Scene prepared;
        prepared.scene_id = scene.scene_id;
        try {
            scene.vehicle.validate();
            scene.pedestrian.validate();
            prepared.vehicle = resample(scene.vehicle, config.sample_rate_hz);
            prepared.pedestrian = resample(scene.pedestrian, config.sample_rate_hz);
        } catch (const std::exception&) {
            ++out.stats.dropped_invalid;
            out.stats.rejected_scene_ids.push_back(scene.scene_id);
            continue;
        }
        if (!prepared.time_supports_overlap()) {
            ++out.stats.dropped_non_interactive;
            out.stats.rejected_scene_ids.push_back(scene.scene_id);
            continue;
        }
        prepared.vehicle = smooth_trajectory(prepared.vehicle, config.smoothing_window);
        prepared.pedestrian = smooth_trajectory(prepared.pedestrian, config.smoothing_window);
        out.scenes.push_back(std::move(prepared));
    }
    out.stats.scenes_kept = out.scenes.size();
    return out;
}

PreparedCorpus ingest(const std::string& csv_path, const SiteConfig& config) {
    auto raw = read_trajectory_csv(csv_path);
    return prepare_scenes(raw, config);
}

// --- JSON artifacts ---------------------------------------------------------

namespace {

json matrix_to_json(const Matrix& m) {
    return json{{"rows", m.rows}, {"cols", m.cols}, {"data", m.a}};
}

Matrix matrix_from_json(const json& j) {
    Matrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    m.a = j.at("data").get<std::vector<double>>();
    if (m.a.size() != m.rows * m.cols) throw std::runtime_error("matrix data size mismatch");
    return m;
}

void require_version(const json& j, const char* expected, const std::string& what) {
    const std::string v = j.value("version", "");
    if (v != expected) {
        throw std::runtime_error(what + ": version mismatch (found '" + v + "', expected '" +
                                 expected + "')");
    }
}

json write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
    return j;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

}  // namespace

json model_to_json(const LstmModel& model) {
    json layers = json::array();
    for (const auto& l : model.layers) {
        layers.push_back(json{{"input_dim", l.input_dim},
                              {"cells", l.cells},
                              {"w_xf", matrix_to_json(l.w_xf)},
                              {"w_hf", matrix_to_json(l.w_hf)},
                              {"w_xi", matrix_to_json(l.w_xi)},
                              {"w_hi", matrix_to_json(l.w_hi)},
                              {"w_xc", matrix_to_json(l.w_xc)},
                              {"w_hc", matrix_to_json(l.w_hc)},
                              {"w_xo", matrix_to_json(l.w_xo)},
                              {"w_ho", matrix_to_json(l.w_ho)},
                              {"b_f", l.b_f},
                              {"b_i", l.b_i},
                              {"b_c", l.b_c},
                              {"b_o", l.b_o}});
    }
    return json{{"version", kModelVersion},
                {"config",
                 {{"name", model.config.name},
                  {"hidden_layers", model.config.hidden_layers},
                  {"cells", model.config.cells},
                  {"dropout_ratio", model.config.dropout_ratio},
                  {"window", model.config.window},
                  {"epochs", model.config.epochs},
                  {"learning_rate", model.config.learning_rate},
                  {"seed", model.config.seed},
                  {"beta1", model.config.beta1},
                  {"beta2", model.config.beta2},
                  {"adam_eps", model.config.adam_eps},
                  {"batch_size", model.config.batch_size}}},
                {"scaler", {{"min", model.scaler.min}, {"max", model.scaler.max}}},
                {"layers", layers},
                {"head", {{"w_hy", model.head.w_hy}, {"b_y", model.head.b_y}}}};
}

LstmModel model_from_json(const json& j) {
    require_version(j, kModelVersion, "model");
    LstmModel model;
    const auto& c = j.at("config");
    model.config.name = c.at("name").get<std::string>();
    model.config.hidden_layers = c.at("hidden_layers").get<int>();
    model.config.cells = c.at("cells").get<int>();
    model.config.dropout_ratio = c.at("dropout_ratio").get<double>();
    model.config.window = c.at("window").get<int>();
    model.config.epochs = c.at("epochs").get<int>();
    model.config.learning_rate = c.at("learning_rate").get<double>();
    model.config.seed = c.at("seed").get<std::uint64_t>();
    model.config.beta1 = c.at("beta1").get<double>();
    model.config.beta2 = c.at("beta2").get<double>();
    model.config.adam_eps = c.at("adam_eps").get<double>();
    model.config.batch_size = c.at("batch_size").get<int>();
    model.scaler.min = j.at("scaler").at("min").get<double>();
    model.scaler.max = j.at("scaler").at("max").get<double>();
    for (const auto& lj : j.at("layers")) {
        LstmCellParams l;
        l.input_dim = lj.at("input_dim").get<std::size_t>();
        l.cells = lj.at("cells").get<std::size_t>();
        l.w_xf = matrix_from_json(lj.at("w_xf"));
        l.w_hf = matrix_from_json(lj.at("w_hf"));
        l.w_xi = matrix_from_json(lj.at("w_xi"));
        l.w_hi = matrix_from_json(lj.at("w_hi"));
        l.w_xc = matrix_from_json(lj.at("w_xc"));
        l.w_hc = matrix_from_json(lj.at("w_hc"));
        l.w_xo = matrix_from_json(lj.at("w_xo"));
        l.w_ho = matrix_from_json(lj.at("w_ho"));
        l.b_f = lj.at("b_f").get<std::vector<double>>();
        l.b_i = lj.at("b_i").get<std::vector<double>>();
        l.b_c = lj.at("b_c").get<std::vector<double>>();
        l.b_o = lj.at("b_o").get<std::vector<double>>();
        model.layers.push_back(std::move(l));
    }
    model.head.w_hy = j.at("head").at("w_hy").get<std::vector<double>>();
    model.head.b_y = j.at("head").at("b_y").get<double>();
    if (model.layers.size() != static_cast<std::size_t>(model.config.hidden_layers)) {
        throw std::runtime_error("model: layer count does not match config");
    }
    return model;
}

void save_model(const std::string& path, const LstmModel& model) {
    write_json_file(path, model_to_json(model));
}

LstmModel load_model(const std::string& path) { return model_from_json(read_json_file(path)); }

namespace {

json zone_grid_to_json(const ZoneGrid& g) {
    return json{{"x_min", g.x_min}, {"y_min", g.y_min}, {"x_max", g.x_max},
                {"y_max", g.y_max}, {"n_zones", g.n_zones}};
}

ZoneGrid zone_grid_from_json(const json& j) {
    ZoneGrid g;
    g.x_min = j.at("x_min").get<double>();
    g.y_min = j.at("y_min").get<double>();
    g.x_max = j.at("x_max").get<double>();
    g.y_max = j.at("y_max").get<double>();
    g.n_zones = j.at("n_zones").get<int>();
    return g;
}

}  // namespace

json dist_store_to_json(const DistStore& store) {
    json cells = json::array();
    for (const auto& [key, dist] : store.cells()) {
        cells.push_back(json{{"feature", to_string(key.feature)},
                             {"class", to_string(key.object_class)},
                             {"zone", key.zone},
                             {"horizon_s", key.horizon_s},
                             {"samples", dist.samples}});
    }
    return json{{"version", kDistsVersion},
                {"grid", zone_grid_to_json(store.grid())},
                {"alpha", store.alpha()},
                {"n_min", store.n_min()},
                {"horizons_s", std::vector<int>(store.horizons_s().begin(), store.horizons_s().end())},
                {"cells", cells}};
}

DistStore dist_store_from_json(const json& j) {
    require_version(j, kDistsVersion, "distribution store");
    DistStore store(zone_grid_from_json(j.at("grid")),
                    j.at("horizons_s").get<std::vector<int>>(), j.at("alpha").get<double>(),
                    j.at("n_min").get<std::size_t>());
    for (const auto& cj : j.at("cells")) {
        DistKey key{feature_from_string(cj.at("feature").get<std::string>()),
                    object_class_from_string(cj.at("class").get<std::string>()),
                    cj.at("zone").get<int>(), cj.at("horizon_s").get<int>()};
        for (double v : cj.at("samples").get<std::vector<double>>()) store.add_sample(key, v);
    }
    store.freeze();
    return store;
}

void save_dist_store(const std::string& path, const DistStore& store) {
    write_json_file(path, dist_store_to_json(store));
}

DistStore load_dist_store(const std::string& path) {
    return dist_store_from_json(read_json_file(path));
}

json site_config_to_json(const SiteConfig& config) {
    return json{{"site_id", config.site_id},
                {"roi", zone_grid_to_json(config.roi)},
                {"sample_rate_hz", config.sample_rate_hz},
                {"horizons_s", config.horizons_s},
                {"alpha", config.alpha},
                {"smoothing_window", config.smoothing_window},
                {"n_min", config.n_min},
                {"arc_segments", config.arc_segments},
                {"seed", config.seed},
                {"train_fraction", config.train_fraction},
                {"meters_per_unit", config.meters_per_unit},
                {"models",
                 {{"vehicle_speed", config.vehicle_speed_model},
                  {"vehicle_degree", config.vehicle_degree_model},
                  {"pedestrian_speed", config.pedestrian_speed_model},
                  {"pedestrian_degree", config.pedestrian_degree_model}}}};
}

SiteConfig site_config_from_json(const json& j) {
    SiteConfig config;
    config.site_id = j.value("site_id", config.site_id);
    if (j.contains("roi")) config.roi = zone_grid_from_json(j.at("roi"));
    if (j.contains("n_zones")) config.roi.n_zones = j.at("n_zones").get<int>();
    config.sample_rate_hz = j.value("sample_rate_hz", config.sample_rate_hz);
    if (j.contains("horizons_s")) config.horizons_s = j.at("horizons_s").get<std::vector<int>>();
    config.alpha = j.value("alpha", config.alpha);
    config.smoothing_window = j.value("smoothing_window", config.smoothing_window);
    config.n_min = j.value("n_min", config.n_min);
    config.arc_segments = j.value("arc_segments", config.arc_segments);
    config.seed = j.value("seed", config.seed);
    config.train_fraction = j.value("train_fraction", config.train_fraction);
    config.meters_per_unit = j.value("meters_per_unit", config.meters_per_unit);
    if (j.contains("models")) {
        const auto& m = j.at("models");
        config.vehicle_speed_model = m.value("vehicle_speed", config.vehicle_speed_model);
        config.vehicle_degree_model = m.value("vehicle_degree", config.vehicle_degree_model);
        config.pedestrian_speed_model = m.value("pedestrian_speed", config.pedestrian_speed_model);
        config.pedestrian_degree_model = m.value("pedestrian_degree", config.pedestrian_degree_model);
    }
    config.validate();
    return config;
}

SiteConfig load_site_config(const std::string& path) {
    return site_config_from_json(read_json_file(path));
}

namespace {

json trajectory_to_json(const Trajectory& t) {
    json samples = json::array();
    for (const auto& s : t.samples) samples.push_back(json::array({s.time_s, s.point.x, s.point.y}));
    return json{{"class", to_string(t.object_class)}, {"samples", samples}};
}

Trajectory trajectory_from_json(const json& j) {
    Trajectory t;
    t.object_class = object_class_from_string(j.at("class").get<std::string>());
    for (const auto& s : j.at("samples")) {
        t.samples.push_back({s.at(0).get<double>(), {s.at(1).get<double>(), s.at(2).get<double>()}});
    }
    return t;
}

}  // namespace

void save_scenes(const std::string& path, std::span<const Scene> scenes) {
    json arr = json::array();
    for (const auto& s : scenes) {
        arr.push_back(json{{"scene_id", s.scene_id},
                           {"vehicle", trajectory_to_json(s.vehicle)},
                           {"pedestrian", trajectory_to_json(s.pedestrian)}});
    }
    write_json_file(path, json{{"version", kScenesVersion}, {"scenes", arr}});
}

std::vector<Scene> load_scenes(const std::string& path) {
    json j = read_json_file(path);
    require_version(j, kScenesVersion, "scenes");
    std::vector<Scene> out;
    for (const auto& sj : j.at("scenes")) {
        Scene s;
        s.scene_id = sj.at("scene_id").get<std::string>();
        s.vehicle = trajectory_from_json(sj.at("vehicle"));
        s.pedestrian = trajectory_from_json(sj.at("pedestrian"));
        out.push_back(std::move(s));
    }
    return out;
}

void save_labels(const std::string& path, std::span<const SceneLabel> labels) {
    json arr = json::array();
    for (const auto& l : labels) {
        json lj{{"scene_id", l.scene_id}, {"paths_cross", l.paths_cross}};
        if (std::isfinite(l.min_gap_s)) lj["min_gap_s"] = l.min_gap_s;
        arr.push_back(std::move(lj));
    }
    write_json_file(path, json{{"version", kLabelsVersion}, {"labels", arr}});
}

std::vector<SceneLabel> load_labels(const std::string& path) {
    json j = read_json_file(path);
    require_version(j, kLabelsVersion, "labels");
    std::vector<SceneLabel> out;
    for (const auto& lj : j.at("labels")) {
        SceneLabel l;
        l.scene_id = lj.at("scene_id").get<std::string>();
        l.paths_cross = lj.at("paths_cross").get<bool>();
        l.min_gap_s = lj.contains("min_gap_s") ? lj.at("min_gap_s").get<double>()
                                               : std::numeric_limits<double>::infinity();
        out.push_back(std::move(l));
    }
    return out;
}

namespace {

json sector_to_json(const std::optional<PcraSector>& s) {
    if (!s) return nullptr;
    return json{{"apex_x", s->apex.x},
                {"apex_y", s->apex.y},
                {"radius", s->radius},
                {"theta_lo", s->theta_lo},
                {"theta_hi", s->theta_hi}};
}

std::optional<PcraSector> sector_from_json(const json& j) {
    if (j.is_null()) return std::nullopt;
    PcraSector s;
    s.apex = {j.at("apex_x").get<double>(), j.at("apex_y").get<double>()};
    s.radius = j.at("radius").get<double>();
    s.theta_lo = j.at("theta_lo").get<double>();
    s.theta_hi = j.at("theta_hi").get<double>();
    return s;
}

}  // namespace

json assessment_to_json(const SceneAssessment& a) {
    json steps = json::array();
    for (const auto& ts : a.steps) {
        json vs = json::array();
        json ps = json::array();
        for (int h = 0; h < 3; ++h) {
            vs.push_back(sector_to_json(ts.vehicle_sectors[h]));
            ps.push_back(sector_to_json(ts.pedestrian_sectors[h]));
        }
        steps.push_back(json{{"time_s", ts.time_s},
                             {"flags",
                              {{"t1", ts.flags.t1},
                               {"t2", ts.flags.t2},
                               {"t3", ts.flags.t3},
                               {"t1_known", ts.flags.t1_known},
                               {"t2_known", ts.flags.t2_known},
                               {"t3_known", ts.flags.t3_known}}},
                             {"severity", to_string(ts.severity)},
                             {"vehicle_sectors", vs},
                             {"pedestrian_sectors", ps}});
    }
    return json{{"scene_id", a.scene_id},
                {"verdict", to_string(a.scene_verdict)},
                {"skipped", a.skipped},
                {"skip_reason", a.skip_reason},
                {"steps", steps}};
}

void write_assessments_jsonl(const std::string& path,
                             std::span<const SceneAssessment> assessments) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    for (const auto& a : assessments) out << assessment_to_json(a).dump() << '\n';
}

namespace {

SeverityLevel severity_from_string(const std::string& s) {
    if (s == "danger") return SeverityLevel::Danger;
    if (s == "warning") return SeverityLevel::Warning;
    return SeverityLevel::RelativeSafe;
}

}  // namespace

std::vector<SceneAssessment> read_assessments_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<SceneAssessment> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line);
        SceneAssessment a;
        a.scene_id = j.at("scene_id").get<std::string>();
        a.scene_verdict = severity_from_string(j.at("verdict").get<std::string>());
        a.skipped = j.at("skipped").get<bool>();
        a.skip_reason = j.at("skip_reason").get<std::string>();
        for (const auto& sj : j.at("steps")) {
            TimestepAssessment ts;
            ts.time_s = sj.at("time_s").get<double>();
            const auto& f = sj.at("flags");
            ts.flags = {f.at("t1").get<bool>(),      f.at("t2").get<bool>(),
                        f.at("t3").get<bool>(),      f.at("t1_known").get<bool>(),
                        f.at("t2_known").get<bool>(), f.at("t3_known").get<bool>()};
            ts.severity = severity_from_string(sj.at("severity").get<std::string>());
            for (int h = 0; h < 3; ++h) {
                ts.vehicle_sectors[h] = sector_from_json(sj.at("vehicle_sectors").at(h));
                ts.pedestrian_sectors[h] = sector_from_json(sj.at("pedestrian_sectors").at(h));
            }
            a.steps.push_back(std::move(ts));
        }
        out.push_back(std::move(a));
    }
    return out;
}

// --- reports ----------------------------------------------------------------

namespace {

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string fmt_mse(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(4) << v;
    return os.str();
}

std::string fmt_ratio(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << v;
    return os.str();
}

}  // namespace

std::string format_eval_table(const std::string& site_id, std::span<const EvalRow> rows) {
    std::ostringstream os;
    os << pad("Target spot", 14) << pad("Target dataset", 20) << pad("Model", 16) << "Test MSE\n";
    bool first = true;
    for (const auto& r : rows) {
        os << pad(first ? site_id : "", 14) << pad(r.target_dataset, 20) << pad(r.model_name, 16)
           << fmt_mse(r.test_mse) << '\n';
        first = false;
    }
    return os.str();
}

std::string format_counts_table(const std::string& site_id, const CorpusCounts& counts) {
    std::ostringstream os;
    os << pad("Target spot", 14) << pad("# of total scenes", 20) << pad("# of dangerous scenes", 24)
       << "# of warning scenes\n";
    os << pad(site_id, 14) << pad(std::to_string(counts.total), 20)
       << pad(std::to_string(counts.danger), 24) << counts.warning << '\n';
    os << "ratios: danger " << fmt_ratio(counts.danger_ratio()) << ", warning "
       << fmt_ratio(counts.warning_ratio()) << '\n';
    return os.str();
}

json eval_report_json(const std::string& site_id, std::span<const EvalRow> rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back(json{{"target_dataset", r.target_dataset},
                           {"model", r.model_name},
                           {"test_mse", r.test_mse},
                           {"evaluated", r.evaluated},
                           {"skipped", r.skipped}});
    }
    return json{{"version", kReportVersion}, {"site_id", site_id}, {"rows", arr}};
}

json counts_report_json(const std::string& site_id, const CorpusCounts& counts) {
    return json{{"version", kReportVersion},
                {"site_id", site_id},
                {"total_scenes", counts.total},
                {"dangerous_scenes", counts.danger},
                {"warning_scenes", counts.warning},
                {"relative_safe_scenes", counts.relative_safe},
                {"skipped_scenes", counts.skipped},
                {"danger_ratio", counts.danger_ratio()},
                {"warning_ratio", counts.warning_ratio()}};
}

void write_loss_csv(const std::string& path,
                    std::span<const std::pair<std::string, std::vector<double>>> curves) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "model,epoch,loss\n";
    out << std::setprecision(17);
    for (const auto& [name, losses] : curves) {
        for (std::size_t e = 0; e < losses.size(); ++e) {
            out << name << ',' << (e + 1) << ',' << losses[e] << '\n';
        }
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace pcra
