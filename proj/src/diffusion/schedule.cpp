#include "disback/diffusion/schedule.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace disback::diffusion {

double NoiseSchedule::sigma_at(double t) const {
    if (!(t >= 0.0 && t <= 1.0))
        throw std::domain_error("sigma_at: t must lie in [0,1], got " + std::to_string(t));
    return sigma_min * std::pow(sigma_max / sigma_min, t);
}

void NoiseSchedule::validate() const {
    if (!(sigma_min > 0.0)) throw std::invalid_argument("NoiseSchedule: sigma_min must be > 0");
    if (!(sigma_max > sigma_min))
        throw std::invalid_argument("NoiseSchedule: sigma_max must exceed sigma_min");
    if (!(t_min >= 0.0 && t_min < 1.0))
        throw std::invalid_argument("NoiseSchedule: t_min must lie in [0,1)");
}

Eigen::MatrixXd perturb(const Eigen::MatrixXd& x0, double sigma, const Eigen::MatrixXd& noise) {
    if (x0.rows() != noise.rows() || x0.cols() != noise.cols())
        throw std::invalid_argument("perturb: noise shape does not match x0");
    return x0 + sigma * noise;
}

Eigen::MatrixXd perturb(const Eigen::MatrixXd& x0, const Eigen::VectorXd& sigma,
                        const Eigen::MatrixXd& noise) {
    if (x0.rows() != noise.rows() || x0.cols() != noise.cols())
        throw std::invalid_argument("perturb: noise shape does not match x0");
    if (sigma.size() != x0.cols())
        throw std::invalid_argument("perturb: one sigma per sample required");
    return x0 + noise * sigma.asDiagonal();
}

} // namespace disback::diffusion
