#pragma once

#include <Eigen/Dense>

namespace disback::diffusion {

/// Variance-exploding noise schedule: the perturbation kernel is
/// N(x_0, sigma(t)^2 I) with sigma geometric in t.
struct NoiseSchedule {
    enum class Kind { Geometric };

    double sigma_min = 0.01;
    double sigma_max = 10.0;
    Kind kind = Kind::Geometric;
    double t_min = 0.02; // sampling floor for t during training

    /// sigma_min * (sigma_max/sigma_min)^t. Throws std::domain_error for
    /// t outside [0,1].
    double sigma_at(double t) const;

    void validate() const;

    bool operator==(const NoiseSchedule&) const = default;
};

/// x_t = x_0 + sigma * eps, elementwise. Columns are samples.
Eigen::MatrixXd perturb(const Eigen::MatrixXd& x0, double sigma, const Eigen::MatrixXd& noise);

/// Per-sample sigma variant; sigma(i) applies to column i.
Eigen::MatrixXd perturb(const Eigen::MatrixXd& x0, const Eigen::VectorXd& sigma,
                        const Eigen::MatrixXd& noise);

} // namespace disback::diffusion
