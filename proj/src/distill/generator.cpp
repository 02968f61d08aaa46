#include "disback/distill/generator.hpp"

#include <stdexcept>

namespace disback::distill {

void GeneratorNetwork::validate() const {
    params.spec.validate();
    if (latent_dim < 1) throw std::invalid_argument("GeneratorNetwork: latent_dim must be >= 1");
    if (params.spec.input_width() != latent_dim)
        throw std::invalid_argument("GeneratorNetwork: input width must equal latent_dim");
}

Eigen::MatrixXd generator_sample(const GeneratorNetwork& gen, const Eigen::MatrixXd& z,
                                 nn::ForwardCache* cache) {
    if (z.rows() != gen.latent_dim)
        throw std::invalid_argument("generator_sample: latent width mismatch");
    return mlp_forward(gen.params, z, cache);
}

} // namespace disback::distill
