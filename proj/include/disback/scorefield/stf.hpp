#pragma once

#include <Eigen/Dense>

namespace disback::scorefield {

/// Softmax weights of the Monte-Carlo score estimate: for reference points
/// x0_i, w_i proportional to exp(-||x_t - x0_i||^2 / (2 sigma_t^2)).
/// The Gaussian normalizer is shared across i and cancels, so only the
/// exponent differences matter; computed in log space. Sums to 1.
Eigen::VectorXd stf_weights(const Eigen::MatrixXd& reference, const Eigen::VectorXd& x_t,
                            double sigma_t);

/// Monte-Carlo estimate of the perturbed-data score from clean reference
/// samples (columns of `reference`):
///   s_hat(x_t) = sum_i w_i (x0_i - x_t) / sigma_t^2.
Eigen::VectorXd stf_score(const Eigen::MatrixXd& reference, const Eigen::VectorXd& x_t,
                          double sigma_t);

/// Column-wise batch variant; query i uses sigma(i).
Eigen::MatrixXd stf_score_batch(const Eigen::MatrixXd& reference, const Eigen::MatrixXd& x_t,
                                const Eigen::VectorXd& sigma);

} // namespace disback::scorefield
