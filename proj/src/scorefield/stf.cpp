#include "disback/scorefield/stf.hpp"

#include <cmath>
#include <stdexcept>

namespace disback::scorefield {

Eigen::VectorXd stf_weights(const Eigen::MatrixXd& reference, const Eigen::VectorXd& x_t,
                            double sigma_t) {
    if (reference.cols() < 1)
        throw std::invalid_argument("stf: reference batch must be non-empty");
    if (reference.rows() != x_t.size())
        throw std::invalid_argument("stf: query dimension does not match reference");
    if (!(sigma_t > 0.0)) throw std::domain_error("stf: sigma_t must be positive");

    const double inv = 1.0 / (2.0 * sigma_t * sigma_t);
    Eigen::VectorXd logits =
        -(reference.colwise() - x_t).colwise().squaredNorm().transpose() * inv;
    const double m = logits.maxCoeff();
    Eigen::VectorXd w = (logits.array() - m).exp();
    return w / w.sum();
}

Eigen::VectorXd stf_score(const Eigen::MatrixXd& reference, const Eigen::VectorXd& x_t,
                          double sigma_t) {
    const Eigen::VectorXd w = stf_weights(reference, x_t, sigma_t);
    Eigen::VectorXd mean_x0 = reference * w;
    return (mean_x0 - x_t) / (sigma_t * sigma_t);
}

Eigen::MatrixXd stf_score_batch(const Eigen::MatrixXd& reference, const Eigen::MatrixXd& x_t,
                                const Eigen::VectorXd& sigma) {
    if (sigma.size() != x_t.cols())
        throw std::invalid_argument("stf: one sigma per query required");
    Eigen::MatrixXd out(x_t.rows(), x_t.cols());
    for (Eigen::Index j = 0; j < x_t.cols(); ++j)
        out.col(j) = stf_score(reference, x_t.col(j), sigma(j));
    return out;
}

} // namespace disback::scorefield
