#include "disback/nn/adam.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace disback::nn {

AdamState AdamState::for_params(const MlpParams& params, AdamConfig config) {
    AdamState s;
    s.m = MlpGrads::zeros_like(params.spec);
    s.v = MlpGrads::zeros_like(params.spec);
    s.config = config;
    return s;
}

void adam_step(AdamState& state, MlpParams& params, const MlpGrads& grads, double lr) {
    if (lr <= 0.0) throw std::invalid_argument("adam_step: lr must be positive");
    const int layers = params.spec.layer_count();
    if (static_cast<int>(grads.weights.size()) != layers ||
        static_cast<int>(state.m.weights.size()) != layers)
        throw std::invalid_argument("adam_step: grads/state layer count mismatch");
    for (int l = 0; l < layers; ++l) {
        if (grads.weights[l].rows() != params.weights[l].rows() ||
            grads.weights[l].cols() != params.weights[l].cols() ||
            grads.biases[l].size() != params.biases[l].size())
            throw std::invalid_argument("adam_step: grads shape mismatch at layer " +
                                        std::to_string(l));
    }
    if (!grads.all_finite())
        throw std::runtime_error("adam_step: non-finite gradient, update rejected");

    const auto& c = state.config;
    state.step += 1;
    const double bc1 = 1.0 - std::pow(c.beta1, static_cast<double>(state.step));
    const double bc2 = 1.0 - std::pow(c.beta2, static_cast<double>(state.step));

    auto update = [&]<typename T>(T& p, T& m, T& v, const T& g) {
        m = c.beta1 * m + (1.0 - c.beta1) * g;
        v = (c.beta2 * v.array() + (1.0 - c.beta2) * g.array().square()).matrix();
        p.array() -= lr * (m.array() / bc1) / ((v.array() / bc2).sqrt() + c.eps);
    };

    for (int l = 0; l < layers; ++l) {
        update(params.weights[l], state.m.weights[l], state.v.weights[l], grads.weights[l]);
        update(params.biases[l], state.m.biases[l], state.v.biases[l], grads.biases[l]);
    }
}

} // namespace disback::nn
