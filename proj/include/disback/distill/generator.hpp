#pragma once

#include "disback/nn/mlp.hpp"

namespace disback::distill {

/// One-step student: maps a latent batch straight to clean samples.
struct GeneratorNetwork {
    nn::MlpParams params;
    int latent_dim = 2;

    int data_dim() const { return params.spec.output_width(); }
    void validate() const;

    bool operator==(const GeneratorNetwork&) const = default;
};

/// x0 = G(z); columns are samples. Pass a cache when gradients are needed.
Eigen::MatrixXd generator_sample(const GeneratorNetwork& gen, const Eigen::MatrixXd& z,
                                 nn::ForwardCache* cache = nullptr);

} // namespace disback::distill
