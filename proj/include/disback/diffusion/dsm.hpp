#pragma once

#include "disback/diffusion/score_net.hpp"
#include "disback/io/rng.hpp"
#include "disback/nn/adam.hpp"

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace disback::diffusion {

/// Source of clean samples x_0; columns are samples.
using SamplerFn = std::function<Eigen::MatrixXd(int n, io::RngStream& rng)>;

struct DsmResult {
    double loss = 0.0;
    nn::MlpGrads grads;
};

/// Denoising score matching on one batch:
///   loss = mean_i w(t_i) * || s(x_t_i, t_i) - (x0_i - x_t_i)/sigma_i^2 ||^2
/// with w(t) = sigma_t^2 so the target scale is even across noise levels.
/// Gradients are exact (reverse mode through the net).
DsmResult dsm_loss_and_grads(const ScoreNetwork& net, const Eigen::MatrixXd& x0,
                             const Eigen::VectorXd& t, const Eigen::MatrixXd& eps);

/// Same loss for an arbitrary score field; used to check injected oracles
/// against the population optimum.
double dsm_loss_for_field(const ScoreFieldFn& field, const NoiseSchedule& schedule,
                          const Eigen::MatrixXd& x0, const Eigen::VectorXd& t,
                          const Eigen::MatrixXd& eps);

struct TrainOptions {
    int64_t steps = 20000;
    double lr = 1e-3;
    int batch = 128;
    uint64_t seed = 0;
    nn::AdamConfig adam = {};
    int64_t telemetry_every = 100;
};

/// (step, loss) pairs captured during training.
using LossTrace = std::vector<std::pair<int64_t, double>>;

/// Trains a fresh score net by Adam on minibatch DSM. Draw order per step:
/// x0 from the sampler, then t ~ U(t_min, 1), then eps. Deterministic given
/// (spec, schedule, options.seed). Throws TrainingDiverged on non-finite loss.
ScoreNetwork train_score_network(const SamplerFn& sampler, const nn::MlpSpec& spec,
                                 const NoiseSchedule& schedule, const TrainOptions& options,
                                 LossTrace* trace = nullptr);

struct TrainingDiverged : std::runtime_error {
    int64_t step;
    explicit TrainingDiverged(int64_t at);
};

} // namespace disback::diffusion
