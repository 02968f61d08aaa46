#include "disback/diffusion/score_net.hpp"

#include <cmath>
#include <stdexcept>

namespace disback::diffusion {

void ScoreNetwork::validate() const {
    params.spec.validate();
    schedule.validate();
    if (params.spec.input_width() != params.spec.output_width() + 1)
        throw std::invalid_argument(
            "ScoreNetwork: input width must be data dim + 1 (time feature)");
}

Eigen::MatrixXd score_eval(const ScoreNetwork& net, const Eigen::MatrixXd& x,
                           const Eigen::VectorXd& sigma, nn::ForwardCache* cache) {
    const int dim = net.data_dim();
    if (x.rows() != dim) throw std::invalid_argument("score_eval: bad data dimension");
    if (sigma.size() != x.cols())
        throw std::invalid_argument("score_eval: one sigma per sample required");
    Eigen::MatrixXd input(dim + 1, x.cols());
    input.topRows(dim) = x;
    input.row(dim) = sigma.array().log().transpose();
    return mlp_forward(net.params, input, cache);
}

ScoreFieldFn field_of(const ScoreNetwork& net) {
    return [net](const Eigen::MatrixXd& x, const Eigen::VectorXd& t) {
        Eigen::VectorXd sigma(t.size());
        for (Eigen::Index i = 0; i < t.size(); ++i) sigma(i) = net.schedule.sigma_at(t(i));
        return score_eval(net, x, sigma);
    };
}

Eigen::VectorXd score_to_eps(const Eigen::VectorXd& s, double sigma_t) {
    if (!(sigma_t > 0.0)) throw std::domain_error("score_to_eps: sigma_t must be positive");
    return -sigma_t * s;
}

Eigen::VectorXd score_to_x0(const Eigen::VectorXd& s, const Eigen::VectorXd& x_t,
                            double sigma_t) {
    if (!(sigma_t > 0.0)) throw std::domain_error("score_to_x0: sigma_t must be positive");
    return s * (sigma_t * sigma_t) + x_t;
}

} // namespace disback::diffusion
