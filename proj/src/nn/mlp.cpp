#include "disback/nn/mlp.hpp"

#include "disback/io/rng.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace disback::nn {

namespace {

Eigen::MatrixXd apply_activation(Activation act, const Eigen::MatrixXd& z) {
    switch (act) {
        case Activation::Tanh:
            return z.array().tanh();
        case Activation::Softplus:
            // log(1+e^z), stabilized for large |z|
            return z.array().unaryExpr([](double v) {
                return v > 30.0 ? v : std::log1p(std::exp(v));
            });
        case Activation::Relu:
            return z.cwiseMax(0.0);
    }
    throw std::logic_error("unknown activation");
}

// d activation / d z, evaluated from the pre-activation.
Eigen::MatrixXd activation_deriv(Activation act, const Eigen::MatrixXd& z) {
    switch (act) {
        case Activation::Tanh: {
            Eigen::ArrayXXd t = z.array().tanh();
            return 1.0 - t.square();
        }
        case Activation::Softplus:
            return z.array().unaryExpr([](double v) {
                return 1.0 / (1.0 + std::exp(-v));
            });
        case Activation::Relu:
            return (z.array() > 0.0).cast<double>();
    }
    throw std::logic_error("unknown activation");
}

} // namespace

void MlpSpec::validate() const {
    if (layer_widths.size() < 2)
        throw std::invalid_argument("MlpSpec: need at least input and output widths");
    for (int w : layer_widths)
        if (w < 1)
            throw std::invalid_argument("MlpSpec: all layer widths must be >= 1, got " +
                                        std::to_string(w));
}

MlpGrads MlpGrads::zeros_like(const MlpSpec& spec) {
    MlpGrads g;
    for (int l = 0; l < spec.layer_count(); ++l) {
        g.weights.emplace_back(
            Eigen::MatrixXd::Zero(spec.layer_widths[l + 1], spec.layer_widths[l]));
        g.biases.emplace_back(Eigen::VectorXd::Zero(spec.layer_widths[l + 1]));
    }
    return g;
}

void MlpGrads::scale(double a) {
    for (auto& w : weights) w *= a;
    for (auto& b : biases) b *= a;
}

bool MlpGrads::all_finite() const {
    for (const auto& w : weights)
        if (!w.allFinite()) return false;
    for (const auto& b : biases)
        if (!b.allFinite()) return false;
    return true;
}

int64_t MlpParams::parameter_count() const {
    int64_t n = 0;
    for (const auto& w : weights) n += w.size();
    for (const auto& b : biases) n += b.size();
    return n;
}

MlpParams mlp_init(const MlpSpec& spec, uint64_t seed) {
    spec.validate();
    io::RngStream rng(seed, "mlp-init");
    MlpParams p;
    p.spec = spec;
    for (int l = 0; l < spec.layer_count(); ++l) {
        const int fan_in = spec.layer_widths[l];
        const int fan_out = spec.layer_widths[l + 1];
        const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
        p.weights.push_back(rng.uniform_matrix(fan_out, fan_in, -bound, bound));
        p.biases.emplace_back(Eigen::VectorXd::Zero(fan_out));
    }
    return p;
}

Eigen::MatrixXd mlp_forward(const MlpParams& params, const Eigen::MatrixXd& input,
                            ForwardCache* cache) {
    if (input.rows() != params.spec.input_width())
        throw std::invalid_argument("mlp_forward: input width " + std::to_string(input.rows()) +
                                    " does not match spec input width " +
                                    std::to_string(params.spec.input_width()));
    if (cache) {
        cache->inputs.clear();
        cache->pre_acts.clear();
    }
    const int layers = params.spec.layer_count();
    Eigen::MatrixXd a = input;
    for (int l = 0; l < layers; ++l) {
        Eigen::MatrixXd z = (params.weights[l] * a).colwise() + params.biases[l];
        if (cache) {
            cache->inputs.push_back(std::move(a));
            cache->pre_acts.push_back(z);
        }
        a = (l + 1 < layers) ? apply_activation(params.spec.activation, z) : std::move(z);
    }
    return a;
}

VjpResult mlp_vjp(const MlpParams& params, const ForwardCache& cache,
                  const Eigen::MatrixXd& upstream) {
    const int layers = params.spec.layer_count();
    if (static_cast<int>(cache.inputs.size()) != layers ||
        static_cast<int>(cache.pre_acts.size()) != layers)
        throw std::invalid_argument("mlp_vjp: cache does not match the network depth");
    if (upstream.rows() != params.spec.output_width())
        throw std::invalid_argument("mlp_vjp: upstream width does not match output width");
    if (upstream.cols() != cache.inputs[0].cols())
        throw std::invalid_argument("mlp_vjp: upstream batch does not match cached batch");
    for (int l = 0; l < layers; ++l)
        if (cache.inputs[l].rows() != params.spec.layer_widths[l])
            throw std::invalid_argument("mlp_vjp: cache was produced by a different spec");

    VjpResult res;
    res.param_grads.weights.resize(layers);
    res.param_grads.biases.resize(layers);

    Eigen::MatrixXd delta = upstream; // final layer is linear
    for (int l = layers - 1; l >= 0; --l) {
        res.param_grads.weights[l] = delta * cache.inputs[l].transpose();
        res.param_grads.biases[l] = delta.rowwise().sum();
        if (l > 0) {
            delta = (params.weights[l].transpose() * delta).cwiseProduct(
                activation_deriv(params.spec.activation, cache.pre_acts[l - 1]));
        } else {
            res.input_grad = params.weights[0].transpose() * delta;
        }
    }
    return res;
}

} // namespace disback::nn
