#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace disback::nn {

enum class Activation { Tanh, Softplus, Relu };

/// Architecture of a dense feed-forward net. Hidden layers share one
/// activation; the final layer is always linear.
struct MlpSpec {
    std::vector<int> layer_widths;
    Activation activation = Activation::Tanh;

    int input_width() const { return layer_widths.front(); }
    int output_width() const { return layer_widths.back(); }
    int layer_count() const { return static_cast<int>(layer_widths.size()) - 1; }

    /// Throws std::invalid_argument on fewer than 2 entries or any width < 1.
    void validate() const;

    bool operator==(const MlpSpec&) const = default;
};

/// Gradient (or moment) buffers shaped exactly like the parameters.
struct MlpGrads {
    std::vector<Eigen::MatrixXd> weights;
    std::vector<Eigen::VectorXd> biases;

    static MlpGrads zeros_like(const MlpSpec& spec);
    void scale(double a);
    bool all_finite() const;
};

struct MlpParams {
    MlpSpec spec;
    std::vector<Eigen::MatrixXd> weights; // weights[l]: widths[l+1] x widths[l]
    std::vector<Eigen::VectorXd> biases;  // biases[l]:  widths[l+1]

    int64_t parameter_count() const;
    bool operator==(const MlpParams&) const = default;
};

/// Fan-in-scaled uniform init: weights[l] ~ U(-1/sqrt(fan_in), 1/sqrt(fan_in))
/// drawn column-major layer by layer, biases zero. Deterministic in `seed`.
MlpParams mlp_init(const MlpSpec& spec, uint64_t seed);

/// Activations saved by the forward pass; sufficient for an exact reverse
/// pass. `inputs[l]` is the input of layer l (inputs[0] is the batch itself),
/// `pre_acts[l]` is W_l * inputs[l] + b_l before the nonlinearity.
struct ForwardCache {
    std::vector<Eigen::MatrixXd> inputs;
    std::vector<Eigen::MatrixXd> pre_acts;
};

/// Batched forward pass; columns are samples. Pass a cache to enable mlp_vjp.
Eigen::MatrixXd mlp_forward(const MlpParams& params, const Eigen::MatrixXd& input,
                            ForwardCache* cache = nullptr);

struct VjpResult {
    Eigen::MatrixXd input_grad; // same shape as the forward input
    MlpGrads param_grads;       // summed over the batch
};

/// Exact gradients of <upstream, output> w.r.t. inputs and parameters.
/// The cache must come from a forward pass of the same params and batch.
VjpResult mlp_vjp(const MlpParams& params, const ForwardCache& cache,
                  const Eigen::MatrixXd& upstream);

} // namespace disback::nn
