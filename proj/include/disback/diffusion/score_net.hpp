#pragma once

#include "disback/diffusion/schedule.hpp"
#include "disback/nn/mlp.hpp"

#include <functional>

namespace disback::diffusion {

enum class TimeFeature { LogSigma };

/// An MLP score model s(x_t, t). Time conditioning appends one feature
/// (log sigma_t) to the data input, so the net maps dim+1 -> dim.
struct ScoreNetwork {
    nn::MlpParams params;
    NoiseSchedule schedule;
    TimeFeature time_feature = TimeFeature::LogSigma;

    int data_dim() const { return params.spec.output_width(); }
    void validate() const;

    bool operator==(const ScoreNetwork&) const = default;
};

/// Per-sample sigma conditioning: column i of x pairs with sigma(i).
Eigen::MatrixXd score_eval(const ScoreNetwork& net, const Eigen::MatrixXd& x,
                           const Eigen::VectorXd& sigma, nn::ForwardCache* cache = nullptr);

/// Batched score field (x, t) -> scores; the common currency between the
/// network, the analytic oracle and the Monte-Carlo estimator.
using ScoreFieldFn =
    std::function<Eigen::MatrixXd(const Eigen::MatrixXd& x, const Eigen::VectorXd& t)>;

/// Wraps a network as a ScoreFieldFn (t is mapped through the net's schedule).
ScoreFieldFn field_of(const ScoreNetwork& net);

/// eps_hat = -sigma_t * s
Eigen::VectorXd score_to_eps(const Eigen::VectorXd& s, double sigma_t);

/// x0_hat = s * sigma_t^2 + x_t
Eigen::VectorXd score_to_x0(const Eigen::VectorXd& s, const Eigen::VectorXd& x_t, double sigma_t);

} // namespace disback::diffusion
