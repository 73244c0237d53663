// SPDX-License-Identifier: Apache-2.0

#include "pcra/lstm.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pcra/kernels.hpp"
#include "pcra/rng.hpp"

namespace pcra {

namespace {

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

void sigmoid_inplace(std::vector<double>& v) {
    for (auto& x : v) x = sigmoid(x);
}

void tanh_inplace(std::vector<double>& v) {
    for (auto& x : v) x = std::tanh(x);
}

// out = Wx x + Wh h + b, one row pass per cell
void gate_preact(const Matrix& wx, const Matrix& wh, std::span<const double> x,
                 std::span<const double> h, const std::vector<double>& b,
                 std::vector<double>& out) {
    const auto& k = kernels::ops();
    const std::size_t cells = wx.rows;
    out.resize(cells);
    for (std::size_t r = 0; r < cells; ++r) {
        out[r] = k.dot(wx.data() + r * wx.cols, x.data(), wx.cols) +
                 k.dot(wh.data() + r * wh.cols, h.data(), wh.cols) + b[r];
    }
}

struct StepCache {
    std::vector<double> x;  // layer input as seen (post-dropout)
    std::vector<double> f, i, g, o, c, tanh_c, h;
};

struct ForwardCache {
    std::vector<std::vector<StepCache>> steps;                // [layer][t]
    std::vector<std::vector<std::vector<double>>> masks;      // [boundary][t], inverted-dropout scales
    double z{0.0};
    double y_hat{0.5};
};

// Runs the stacked network over the window, filling caches. dropout_rng
// non-null enables inverted dropout on inter-layer hidden outputs.
void forward_full(const LstmModel& model, std::span<const double> window, Rng* dropout_rng,
                  ForwardCache& cache) {
    const auto layer_count = model.layers.size();
    const std::size_t t_count = window.size();
    const double p = model.config.dropout_ratio;

    cache.steps.assign(layer_count, std::vector<StepCache>(t_count));
    cache.masks.assign(layer_count > 0 ? layer_count - 1 : 0,
                       std::vector<std::vector<double>>(t_count));

    std::vector<double> x_buf;
    for (std::size_t t = 0; t < t_count; ++t) {
        x_buf.assign(1, window[t]);
        for (std::size_t l = 0; l < layer_count; ++l) {
            const auto& params = model.layers[l];
            StepCache& sc = cache.steps[l][t];
            const std::vector<double> zero(params.cells, 0.0);
            std::span<const double> h_prev =
                t > 0 ? std::span<const double>(cache.steps[l][t - 1].h) : std::span<const double>(zero);
            std::span<const double> c_prev =
                t > 0 ? std::span<const double>(cache.steps[l][t - 1].c) : std::span<const double>(zero);

            sc.x = x_buf;
            gate_preact(params.w_xf, params.w_hf, sc.x, h_prev, params.b_f, sc.f);
            gate_preact(params.w_xi, params.w_hi, sc.x, h_prev, params.b_i, sc.i);
            gate_preact(params.w_xc, params.w_hc, sc.x, h_prev, params.b_c, sc.g);
            gate_preact(params.w_xo, params.w_ho, sc.x, h_prev, params.b_o, sc.o);
            sigmoid_inplace(sc.f);
            sigmoid_inplace(sc.i);
            tanh_inplace(sc.g);
            sigmoid_inplace(sc.o);

            const auto& k = kernels::ops();
            sc.c.resize(params.cells);
            k.mul(sc.f.data(), c_prev.data(), sc.c.data(), params.cells);
            k.mul_acc(sc.i.data(), sc.g.data(), sc.c.data(), params.cells);
            sc.tanh_c = sc.c;
            tanh_inplace(sc.tanh_c);
            sc.h.resize(params.cells);
            k.mul(sc.o.data(), sc.tanh_c.data(), sc.h.data(), params.cells);

            x_buf = sc.h;
            if (l + 1 < layer_count && dropout_rng != nullptr && p > 0.0) {
                auto& mask = cache.masks[l][t];
                mask.resize(params.cells);
                const double keep = 1.0 - p;
                for (std::size_t j = 0; j < params.cells; ++j) {
                    mask[j] = dropout_rng->next_unit() < p ? 0.0 : 1.0 / keep;
                    x_buf[j] *= mask[j];
                }
            }
        }
    }

    const auto& top = cache.steps.back().back();
    cache.z = kernels::ops().dot(model.head.w_hy.data(), top.h.data(), top.h.size()) +
              model.head.b_y;
    cache.y_hat = sigmoid(cache.z);
}

// Accumulates (unscaled) gradients of 1/2 (y - y_hat)^2 into grads.
void backward_full(const LstmModel& model, const ForwardCache& cache, double target,
                   ModelGrads& grads) {
    const auto& k = kernels::ops();
    const auto layer_count = model.layers.size();
    const std::size_t t_count = cache.steps[0].size();

    const auto& top = cache.steps.back().back();
    const double y_hat = cache.y_hat;
    const double dz = (y_hat - target) * y_hat * (1.0 - y_hat);
    k.axpy(dz, top.h.data(), grads.w_hy.data(), top.h.size());
    grads.b_y += dz;

    // dh contributions arriving from above (or from the head, top layer)
    std::vector<std::vector<double>> dh_above(t_count);
    const std::size_t top_cells = model.layers.back().cells;
    for (auto& v : dh_above) v.assign(top_cells, 0.0);
    k.axpy(dz, model.head.w_hy.data(), dh_above[t_count - 1].data(), top_cells);

    std::vector<double> dh, dc, da_f, da_i, da_g, da_o, dh_next, dc_next, dx;
    for (std::size_t l = layer_count; l-- > 0;) {
        const auto& params = model.layers[l];
        auto& g = grads.layers[l];
        const std::size_t cells = params.cells;
        const bool has_below = l > 0;
        std::vector<std::vector<double>> dh_below;
        if (has_below) {
            dh_below.assign(t_count, std::vector<double>(model.layers[l - 1].cells, 0.0));
        }

        dh_next.assign(cells, 0.0);
        dc_next.assign(cells, 0.0);
        const std::vector<double> zero(cells, 0.0);
        for (std::size_t t = t_count; t-- > 0;) {
            const StepCache& sc = cache.steps[l][t];
            std::span<const double> h_prev =
                t > 0 ? std::span<const double>(cache.steps[l][t - 1].h)
                      : std::span<const double>(zero);
            std::span<const double> c_prev =
                t > 0 ? std::span<const double>(cache.steps[l][t - 1].c)
                      : std::span<const double>(zero);

            dh.resize(cells);
            for (std::size_t j = 0; j < cells; ++j) dh[j] = dh_above[t][j] + dh_next[j];

            da_o.resize(cells);
            dc.resize(cells);
            da_f.resize(cells);
            da_i.resize(cells);
            da_g.resize(cells);
            for (std::size_t j = 0; j < cells; ++j) {
                const double o = sc.o[j];
                const double tc = sc.tanh_c[j];
                da_o[j] = dh[j] * tc * o * (1.0 - o);
                dc[j] = dc_next[j] + dh[j] * o * (1.0 - tc * tc);
                const double f = sc.f[j];
                const double i = sc.i[j];
                const double g_ = sc.g[j];
                da_f[j] = dc[j] * c_prev[j] * f * (1.0 - f);
                da_i[j] = dc[j] * g_ * i * (1.0 - i);
                da_g[j] = dc[j] * i * (1.0 - g_ * g_);
            }

            // weight gradients
            k.outer_acc(g.w_xf.data(), da_f.data(), cells, sc.x.data(), sc.x.size());
            k.outer_acc(g.w_xi.data(), da_i.data(), cells, sc.x.data(), sc.x.size());
            k.outer_acc(g.w_xc.data(), da_g.data(), cells, sc.x.data(), sc.x.size());
            k.outer_acc(g.w_xo.data(), da_o.data(), cells, sc.x.data(), sc.x.size());
            if (t > 0) {
                k.outer_acc(g.w_hf.data(), da_f.data(), cells, h_prev.data(), cells);
                k.outer_acc(g.w_hi.data(), da_i.data(), cells, h_prev.data(), cells);
                k.outer_acc(g.w_hc.data(), da_g.data(), cells, h_prev.data(), cells);
                k.outer_acc(g.w_ho.data(), da_o.data(), cells, h_prev.data(), cells);
            }
            k.axpy(1.0, da_f.data(), g.b_f.data(), cells);
            k.axpy(1.0, da_i.data(), g.b_i.data(), cells);
            k.axpy(1.0, da_g.data(), g.b_c.data(), cells);
            k.axpy(1.0, da_o.data(), g.b_o.data(), cells);

            // propagate to t-1
            dc_next.resize(cells);
            k.mul(dc.data(), sc.f.data(), dc_next.data(), cells);
            dh_next.assign(cells, 0.0);
            k.matvec_t_acc(params.w_hf.data(), cells, cells, da_f.data(), dh_next.data());
            k.matvec_t_acc(params.w_hi.data(), cells, cells, da_i.data(), dh_next.data());
            k.matvec_t_acc(params.w_hc.data(), cells, cells, da_g.data(), dh_next.data());
            k.matvec_t_acc(params.w_ho.data(), cells, cells, da_o.data(), dh_next.data());

            // propagate to the layer below through the dropout mask
            if (has_below) {
                dx.assign(sc.x.size(), 0.0);
                k.matvec_t_acc(params.w_xf.data(), cells, sc.x.size(), da_f.data(), dx.data());
                k.matvec_t_acc(params.w_xi.data(), cells, sc.x.size(), da_i.data(), dx.data());
                k.matvec_t_acc(params.w_xc.data(), cells, sc.x.size(), da_g.data(), dx.data());
                k.matvec_t_acc(params.w_xo.data(), cells, sc.x.size(), da_o.data(), dx.data());
                const auto& mask = cache.masks[l - 1][t];
                if (!mask.empty()) {
                    for (std::size_t j = 0; j < dx.size(); ++j) dx[j] *= mask[j];
                }
                for (std::size_t j = 0; j < dx.size(); ++j) dh_below[t][j] += dx[j];
            }
        }
        if (has_below) dh_above = std::move(dh_below);
    }
}

void check_window(const LstmModel& model, std::size_t len) {
    if (len != static_cast<std::size_t>(model.config.window)) {
        throw std::invalid_argument("window length " + std::to_string(len) +
                                    " does not match configured window " +
                                    std::to_string(model.config.window));
    }
}

}  // namespace

LstmCellParams::LstmCellParams(std::size_t input_dim_, std::size_t cells_)
    : input_dim(input_dim_),
      cells(cells_),
      w_xf(cells_, input_dim_),
      w_hf(cells_, cells_),
      w_xi(cells_, input_dim_),
      w_hi(cells_, cells_),
      w_xc(cells_, input_dim_),
      w_hc(cells_, cells_),
      w_xo(cells_, input_dim_),
      w_ho(cells_, cells_),
      b_f(cells_, 0.0),
      b_i(cells_, 0.0),
      b_c(cells_, 0.0),
      b_o(cells_, 0.0) {}

namespace {

const std::array<std::pair<const char*, std::pair<int, int>>, 10> kCatalog = {{
    {"Simple-TP", {1, 3}},
    {"Deep-TP-3-10", {3, 10}},
    {"Deep-TP-3-40", {3, 40}},
    {"Deep-TP-3-80", {3, 80}},
    {"Deep-TP-5-10", {5, 10}},
    {"Deep-TP-5-40", {5, 40}},
    {"Deep-TP-5-80", {5, 80}},
    {"Deep-TP-10-10", {10, 10}},
    {"Deep-TP-10-40", {10, 40}},
    {"Deep-TP-10-80", {10, 80}},
}};

const std::vector<std::string> kCatalogNames = [] {
    std::vector<std::string> names;
    for (const auto& [name, dims] : kCatalog) names.emplace_back(name);
    return names;
}();

}  // namespace

ModelConfig catalog_config(const std::string& name, std::uint64_t seed) {
    for (const auto& [cat_name, dims] : kCatalog) {
        if (name == cat_name) {
            ModelConfig cfg;
            cfg.name = name;
            cfg.hidden_layers = dims.first;
            cfg.cells = dims.second;
            cfg.seed = seed;
            return cfg;
        }
    }
    throw std::invalid_argument("unknown catalog model: " + name);
}

std::span<const std::string> catalog_names() { return kCatalogNames; }

LstmModel model_from_config(const ModelConfig& config) {
    if (config.hidden_layers < 1 || config.cells < 1 || config.window < 1) {
        throw std::invalid_argument("model config: layers, cells and window must be positive");
    }
    LstmModel model;
    model.config = config;
    Rng rng(config.seed);
    const auto cells = static_cast<std::size_t>(config.cells);
    const double bound = 1.0 / std::sqrt(static_cast<double>(cells));

    for (int l = 0; l < config.hidden_layers; ++l) {
        const std::size_t input_dim = l == 0 ? 1 : cells;
        LstmCellParams p(input_dim, cells);
        for (Matrix* m : {&p.w_xf, &p.w_hf, &p.w_xi, &p.w_hi, &p.w_xc, &p.w_hc, &p.w_xo, &p.w_ho}) {
            for (auto& v : m->a) v = rng.uniform(-bound, bound);
        }
        std::fill(p.b_f.begin(), p.b_f.end(), 1.0);  // forget-gate bias
        model.layers.push_back(std::move(p));
    }
    model.head.w_hy.resize(cells);
    for (auto& v : model.head.w_hy) v = rng.uniform(-bound, bound);
    model.head.b_y = 0.0;
    model.scaler = {0.0, 1.0};
    return model;
}

LstmModel model_from_catalog(const std::string& name, std::uint64_t seed) {
    return model_from_config(catalog_config(name, seed));
}

LstmState cell_forward(const LstmCellParams& params, std::span<const double> x,
                       const LstmState& prev) {
    if (x.size() != params.input_dim) throw std::invalid_argument("cell_forward: input dimension mismatch");
    if (prev.h.size() != params.cells || prev.c.size() != params.cells) {
        throw std::invalid_argument("cell_forward: state dimension mismatch");
    }
    const auto& k = kernels::ops();
    std::vector<double> f, i, g, o;
    gate_preact(params.w_xf, params.w_hf, x, prev.h, params.b_f, f);
    gate_preact(params.w_xi, params.w_hi, x, prev.h, params.b_i, i);
    gate_preact(params.w_xc, params.w_hc, x, prev.h, params.b_c, g);
    gate_preact(params.w_xo, params.w_ho, x, prev.h, params.b_o, o);
    sigmoid_inplace(f);
    sigmoid_inplace(i);
    tanh_inplace(g);
    sigmoid_inplace(o);

    LstmState next(params.cells);
    k.mul(f.data(), prev.c.data(), next.c.data(), params.cells);
    k.mul_acc(i.data(), g.data(), next.c.data(), params.cells);
    std::vector<double> tc = next.c;
    tanh_inplace(tc);
    k.mul(o.data(), tc.data(), next.h.data(), params.cells);
    return next;
}

double forward_sequence(const LstmModel& model, std::span<const double> window) {
    check_window(model, window.size());
    ForwardCache cache;
    forward_full(model, window, nullptr, cache);
    return cache.y_hat;
}

ModelGrads zero_grads_like(const LstmModel& model) {
    ModelGrads g;
    for (const auto& layer : model.layers) {
        g.layers.emplace_back(layer.input_dim, layer.cells);
    }
    g.w_hy.assign(model.head.w_hy.size(), 0.0);
    g.b_y = 0.0;
    return g;
}

double batch_loss(const LstmModel& model, std::span<const SequenceSample> samples) {
    if (samples.empty()) throw std::invalid_argument("batch_loss: empty sample set");
    double total = 0.0;
    ForwardCache cache;
    for (const auto& s : samples) {
        check_window(model, s.window.size());
        forward_full(model, s.window, nullptr, cache);
        const double d = s.target - cache.y_hat;
        total += 0.5 * d * d;
    }
    return total / static_cast<double>(samples.size());
}

ModelGrads batch_gradients(const LstmModel& model, std::span<const SequenceSample> samples,
                           double* loss_out) {
    if (samples.empty()) throw std::invalid_argument("batch_gradients: empty sample set");
    ModelGrads grads = zero_grads_like(model);
    double total = 0.0;
    ForwardCache cache;
    for (const auto& s : samples) {
        check_window(model, s.window.size());
        forward_full(model, s.window, nullptr, cache);
        const double d = s.target - cache.y_hat;
        total += 0.5 * d * d;
        backward_full(model, cache, s.target, grads);
    }
    const double scale = 1.0 / static_cast<double>(samples.size());
    for (auto span : gradient_tensors(grads)) {
        for (auto& v : span) v *= scale;
    }
    if (loss_out != nullptr) *loss_out = total * scale;
    return grads;
}

namespace {

void collect_tensors(std::vector<LstmCellParams>& layers, std::vector<double>& w_hy, double& b_y,
                     std::vector<std::span<double>>& out) {
    for (auto& l : layers) {
        for (Matrix* m : {&l.w_xf, &l.w_hf, &l.w_xi, &l.w_hi, &l.w_xc, &l.w_hc, &l.w_xo, &l.w_ho}) {
            out.emplace_back(m->a);
        }
        for (std::vector<double>* b : {&l.b_f, &l.b_i, &l.b_c, &l.b_o}) out.emplace_back(*b);
    }
    out.emplace_back(w_hy);
    out.emplace_back(&b_y, 1);
}

}  // namespace

std::vector<std::span<double>> parameter_tensors(LstmModel& model) {
    std::vector<std::span<double>> out;
    collect_tensors(model.layers, model.head.w_hy, model.head.b_y, out);
    return out;
}

std::vector<std::span<double>> gradient_tensors(ModelGrads& grads) {
    std::vector<std::span<double>> out;
    collect_tensors(grads.layers, grads.w_hy, grads.b_y, out);
    return out;
}

TrainResult train(LstmModel& model, std::span<const SequenceSample> samples) {
    if (samples.empty()) throw std::invalid_argument("train: empty training set");
    for (const auto& s : samples) check_window(model, s.window.size());

    const auto& cfg = model.config;
    Rng rng(cfg.seed ^ 0x7261696e6c737464ULL);  // independent of init stream

    auto params = parameter_tensors(model);
    std::vector<std::vector<double>> adam_m;
    std::vector<std::vector<double>> adam_v;
    for (auto sp : params) {
        adam_m.emplace_back(sp.size(), 0.0);
        adam_v.emplace_back(sp.size(), 0.0);
    }

    ModelGrads grads = zero_grads_like(model);
    auto grad_views = gradient_tensors(grads);

    std::vector<std::size_t> order(samples.size());
    std::iota(order.begin(), order.end(), 0);

    TrainResult result;
    result.epoch_loss.reserve(cfg.epochs);
    const auto& k = kernels::ops();
    ForwardCache cache;
    long adam_t = 0;

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        rng.shuffle(order);
        double loss_sum = 0.0;
        const std::size_t batch = static_cast<std::size_t>(std::max(1, cfg.batch_size));
        for (std::size_t start = 0; start < order.size(); start += batch) {
            const std::size_t end = std::min(order.size(), start + batch);
            for (auto gv : grad_views) std::fill(gv.begin(), gv.end(), 0.0);
            for (std::size_t idx = start; idx < end; ++idx) {
                const auto& s = samples[order[idx]];
                forward_full(model, s.window, cfg.dropout_ratio > 0.0 ? &rng : nullptr, cache);
                const double d = s.target - cache.y_hat;
                loss_sum += 0.5 * d * d;
                backward_full(model, cache, s.target, grads);
            }
            const double scale = 1.0 / static_cast<double>(end - start);
            ++adam_t;
            const double inv_bc1 = 1.0 / (1.0 - std::pow(cfg.beta1, static_cast<double>(adam_t)));
            const double inv_bc2 = 1.0 / (1.0 - std::pow(cfg.beta2, static_cast<double>(adam_t)));
            for (std::size_t ti = 0; ti < params.size(); ++ti) {
                auto gv = grad_views[ti];
                for (auto& v : gv) v *= scale;
                k.adam_step(params[ti].data(), adam_m[ti].data(), adam_v[ti].data(), gv.data(),
                            gv.size(), cfg.beta1, cfg.beta2, inv_bc1, inv_bc2, cfg.learning_rate,
                            cfg.adam_eps);
            }
        }
        const double epoch_loss = loss_sum / static_cast<double>(samples.size());
        if (!std::isfinite(epoch_loss)) {
            throw std::runtime_error("training diverged (non-finite loss) at epoch " +
                                     std::to_string(epoch + 1));
        }
        result.epoch_loss.push_back(epoch_loss);
    }
    return result;
}

RolloutSeries rollout_series(const LstmModel& speed_model, const LstmModel& degree_model,
                             std::span<const VelocityVector> observed, std::size_t steps) {
    const auto w = static_cast<std::size_t>(speed_model.config.window);
    if (static_cast<std::size_t>(degree_model.config.window) != w) {
        throw std::invalid_argument("rollout: speed/degree window mismatch");
    }
    if (observed.size() < w) {
        throw std::invalid_argument("rollout: observed sequence shorter than window");
    }

    auto speeds = speed_series(observed);
    auto degrees = unwrap_degrees(observed);
    std::vector<double> sw(speeds.end() - static_cast<std::ptrdiff_t>(w), speeds.end());
    std::vector<double> dw(degrees.end() - static_cast<std::ptrdiff_t>(w), degrees.end());

    RolloutSeries out;
    out.speeds.reserve(steps);
    out.degrees.reserve(steps);
    std::vector<double> norm(w);
    for (std::size_t s = 0; s < steps; ++s) {
        for (std::size_t j = 0; j < w; ++j) norm[j] = speed_model.scaler.normalize_clamped(sw[j]);
        const double pred_speed = speed_model.scaler.denormalize(forward_sequence(speed_model, norm));
        for (std::size_t j = 0; j < w; ++j) norm[j] = degree_model.scaler.normalize_clamped(dw[j]);
        const double pred_degree = degree_model.scaler.denormalize(forward_sequence(degree_model, norm));

        out.speeds.push_back(std::max(0.0, pred_speed));
        out.degrees.push_back(pred_degree);
        sw.erase(sw.begin());
        sw.push_back(pred_speed);
        dw.erase(dw.begin());
        dw.push_back(pred_degree);
    }
    return out;
}

std::vector<VelocityVector> rollout(const LstmModel& speed_model, const LstmModel& degree_model,
                                    std::span<const VelocityVector> observed, std::size_t steps) {
    auto series = rollout_series(speed_model, degree_model, observed, steps);
    return velocities_from_series(series.speeds, series.degrees);
}

TrajectoryEval evaluate_trajectory_mse(const LstmModel& speed_model,
                                       const LstmModel& degree_model,
                                       std::span<const Scene> scenes, ObjectClass object_class,
                                       double preceding_fraction) {
    if (!(preceding_fraction > 0.0 && preceding_fraction < 1.0)) {
        throw std::invalid_argument("evaluate_trajectory_mse: preceding_fraction must be in (0,1)");
    }
    const auto w = static_cast<std::size_t>(speed_model.config.window);
    TrajectoryEval eval;
    double speed_sum = 0.0;
    double degree_sum = 0.0;

    for (const auto& scene : scenes) {
        const Trajectory& traj =
            object_class == ObjectClass::Vehicle ? scene.vehicle : scene.pedestrian;
        auto vels = points_to_velocities(traj);
        const std::size_t len = vels.size();
        std::size_t preceding =
            std::max(w, static_cast<std::size_t>(std::floor(preceding_fraction *
                                                            static_cast<double>(len))));
        if (len <= preceding) {
            ++eval.skipped;
            continue;
        }
        const std::size_t subsequent = len - preceding;
        auto predicted = rollout_series(speed_model, degree_model,
                                        std::span<const VelocityVector>(vels).first(preceding),
                                        subsequent);
        auto obs_speeds = speed_series(vels);
        auto obs_degrees = unwrap_degrees(vels);

        double se_speed = 0.0;
        double se_degree = 0.0;
        for (std::size_t j = 0; j < subsequent; ++j) {
            const double ds = speed_model.scaler.normalize_clamped(predicted.speeds[j]) -
                              speed_model.scaler.normalize_clamped(obs_speeds[preceding + j]);
            const double dd = degree_model.scaler.normalize_clamped(predicted.degrees[j]) -
                              degree_model.scaler.normalize_clamped(obs_degrees[preceding + j]);
            se_speed += ds * ds;
            se_degree += dd * dd;
        }
        speed_sum += se_speed / static_cast<double>(subsequent);
        degree_sum += se_degree / static_cast<double>(subsequent);
        ++eval.evaluated;
    }

    if (eval.evaluated > 0) {
        eval.speed_mse = speed_sum / static_cast<double>(eval.evaluated);
        eval.degree_mse = degree_sum / static_cast<double>(eval.evaluated);
    }
    return eval;
}

}  // namespace pcra
