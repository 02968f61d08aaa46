#include "disback/nn/finite_diff.hpp"

#include <stdexcept>

namespace disback::nn {

MlpGrads finite_diff_grad(const std::function<double(const MlpParams&)>& f,
                          const MlpParams& params, double step) {
    if (step <= 0.0) throw std::invalid_argument("finite_diff_grad: step must be positive");
    MlpGrads g = MlpGrads::zeros_like(params.spec);
    MlpParams work = params;

    auto probe = [&](double& slot, double& out) {
        const double saved = slot;
        slot = saved + step;
        const double hi = f(work);
        slot = saved - step;
        const double lo = f(work);
        slot = saved;
        out = (hi - lo) / (2.0 * step);
    };

    for (size_t l = 0; l < work.weights.size(); ++l) {
        for (Eigen::Index i = 0; i < work.weights[l].size(); ++i)
            probe(work.weights[l].data()[i], g.weights[l].data()[i]);
        for (Eigen::Index i = 0; i < work.biases[l].size(); ++i)
            probe(work.biases[l].data()[i], g.biases[l].data()[i]);
    }
    return g;
}

} // namespace disback::nn
