// SPDX-License-Identifier: Apache-2.0
//
// From-scratch stacked LSTM networks for speed and degree prediction:
// forward pass, backpropagation through time, Adam training, and
// autoregressive multi-step rollout. One network predicts one scalar
// feature; a trajectory predictor pairs a speed network with a degree
// network.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pcra/dataset.hpp"
#include "pcra/trajectory.hpp"

namespace pcra {

/// Minimal row-major matrix.
struct Matrix {
    std::size_t rows{0};
    std::size_t cols{0};
    std::vector<double> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}

    double& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
    [[nodiscard]] double* data() { return a.data(); }
    [[nodiscard]] const double* data() const { return a.data(); }
    [[nodiscard]] std::size_t size() const { return a.size(); }
};

struct ModelConfig {
    std::string name;
    int hidden_layers{1};
    int cells{3};
    double dropout_ratio{0.2};
    int window{3};
    int epochs{80};
    double learning_rate{1e-3};
    std::uint64_t seed{0};

    // Adam defaults (the paper names only the optimizer)
    double beta1{0.9};
    double beta2{0.999};
    double adam_eps{1e-8};
    int batch_size{32};
};

/// Table of catalog models: name -> (hidden layers, cells) with the shared
/// hyperparameters. Throws on an unknown name.
ModelConfig catalog_config(const std::string& name, std::uint64_t seed);

/// All catalog model names.
std::span<const std::string> catalog_names();

/// Per-gate weights of one LSTM layer. W_x* are (cells x input_dim),
/// W_h* are (cells x cells), biases have length cells.
struct LstmCellParams {
    std::size_t input_dim{0};
    std::size_t cells{0};
    Matrix w_xf, w_hf, w_xi, w_hi, w_xc, w_hc, w_xo, w_ho;
    std::vector<double> b_f, b_i, b_c, b_o;

    LstmCellParams() = default;
    LstmCellParams(std::size_t input_dim, std::size_t cells);
};

struct LstmState {
    std::vector<double> h;
    std::vector<double> c;

    explicit LstmState(std::size_t cells = 0) : h(cells, 0.0), c(cells, 0.0) {}
};

/// Affine + sigmoid readout of the top layer's last hidden state.
struct OutputHead {
    std::vector<double> w_hy;
    double b_y{0.0};
};

struct LstmModel {
    ModelConfig config;
    std::vector<LstmCellParams> layers;
    OutputHead head;
    MinMaxScaler scaler;  // feature normalization fitted on the training set
};

/// Catalog model with deterministic weight init: uniform in
/// [-1/sqrt(cells), 1/sqrt(cells)], forget-gate bias 1.
LstmModel model_from_catalog(const std::string& name, std::uint64_t seed);
LstmModel model_from_config(const ModelConfig& config);

/// One gate update (Eqs. of the standard LSTM cell). Throws on dimension
/// mismatch.
LstmState cell_forward(const LstmCellParams& params, std::span<const double> x,
                       const LstmState& prev);

/// Run the stacked network over a normalized window and return the
/// normalized prediction in (0,1). No dropout is applied.
double forward_sequence(const LstmModel& model, std::span<const double> window);

/// One supervised sample: normalized window plus normalized target.
struct SequenceSample {
    std::vector<double> window;
    double target{0.0};
};

/// Per-parameter gradients, mirroring the model layout.
struct ModelGrads {
    std::vector<LstmCellParams> layers;  // reused as gradient storage
    std::vector<double> w_hy;
    double b_y{0.0};
};

ModelGrads zero_grads_like(const LstmModel& model);

/// Mean loss (1/2 (y - y_hat)^2) over samples, dropout disabled.
double batch_loss(const LstmModel& model, std::span<const SequenceSample> samples);

/// Analytic BPTT gradients of the mean loss, dropout disabled.
ModelGrads batch_gradients(const LstmModel& model, std::span<const SequenceSample> samples,
                           double* loss_out = nullptr);

/// Stable-order views over every parameter tensor (for Adam state and the
/// finite-difference oracle). Gradient tensors come out in the same order.
std::vector<std::span<double>> parameter_tensors(LstmModel& model);
std::vector<std::span<double>> gradient_tensors(ModelGrads& grads);

struct TrainResult {
    std::vector<double> epoch_loss;  // mean training loss per epoch
};

/// Adam + BPTT training with inverted dropout between stacked layers.
/// Deterministic given (seed, data, config). Throws on an empty dataset or
/// when the loss diverges (message names the epoch).
TrainResult train(LstmModel& model, std::span<const SequenceSample> samples);

/// Autoregressive rollout in raw feature units: speeds and unwrapped
/// bearings, one entry per requested step.
struct RolloutSeries {
    std::vector<double> speeds;
    std::vector<double> degrees;  // unwrapped
};

RolloutSeries rollout_series(const LstmModel& speed_model, const LstmModel& degree_model,
                             std::span<const VelocityVector> observed, std::size_t steps);

/// Rollout as velocity vectors (bearings wrapped into [0, 360)).
std::vector<VelocityVector> rollout(const LstmModel& speed_model, const LstmModel& degree_model,
                                    std::span<const VelocityVector> observed, std::size_t steps);

/// Trajectory-level test error: feed the preceding segment, roll out over
/// the rest, and compare normalized predictions against observations.
struct TrajectoryEval {
    double speed_mse{0.0};
    double degree_mse{0.0};
    std::size_t evaluated{0};
    std::size_t skipped{0};  // too short to split
};

TrajectoryEval evaluate_trajectory_mse(const LstmModel& speed_model,
                                       const LstmModel& degree_model,
                                       std::span<const Scene> scenes, ObjectClass object_class,
                                       double preceding_fraction);

}  // namespace pcra
