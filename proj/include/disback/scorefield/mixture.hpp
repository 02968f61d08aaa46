#pragma once

#include "disback/io/rng.hpp"

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace disback::scorefield {

struct MixtureComponent {
    Eigen::Vector2d mean;
    double variance = 1.0; // isotropic covariance = variance * I
    double weight = 1.0;

    bool operator==(const MixtureComponent&) const = default;
};

/// Ground-truth 2D isotropic Gaussian mixture. Convolving with the VE kernel
/// N(0, sigma_t^2 I) keeps it a mixture, so scores at any noise level are
/// available in closed form.
struct MixtureSpec {
    std::vector<MixtureComponent> components;

    /// >= 1 component, variances > 0, weights positive and summing to 1
    /// within 1e-12.
    void validate() const;

    bool operator==(const MixtureSpec&) const = default;
};

/// Exact score of sum_i w_i N(mu_i, (v_i + sigma_t^2) I) at x. Responsibilities
/// are computed in log space, so it never underflows for finite x.
Eigen::Vector2d analytic_mixture_score(const MixtureSpec& mix, const Eigen::Vector2d& x,
                                       double sigma_t);

/// log q_t(x): log-sum-exp over components. Test oracle for the score.
double mixture_log_density(const MixtureSpec& mix, const Eigen::Vector2d& x, double sigma_t);

/// n clean draws (2 x n). Per sample: one uniform for the component, then
/// two normals for the offset.
Eigen::MatrixXd sample_mixture(const MixtureSpec& mix, int n, io::RngStream& rng);

/// The benchmark distribution: `components` equal-weight isotropic Gaussians
/// with means ~ U([-mean_range, mean_range]^2) and stddevs ~ U(sigma_lo,
/// sigma_hi), drawn from the "mixture" stream of `seed`.
MixtureSpec make_benchmark_mixture(int components, uint64_t seed, double mean_range = 5.0,
                                   double sigma_lo = 0.3, double sigma_hi = 0.6);

} // namespace disback::scorefield
