#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <string_view>

namespace disback::io {

/// Named, splittable random stream.
///
/// Every consumer of randomness owns one stream, derived as
///   seed = splitmix64(master ^ fnv1a64(name) ^ salt * golden)
/// so reordering or removing one pipeline stage never perturbs the draws
/// of another. All sample types are generated explicitly (53-bit uniforms,
/// Box-Muller normals) so results do not depend on the standard library's
/// distribution implementations.
class RngStream {
public:
    RngStream(uint64_t master, std::string_view name, uint64_t salt = 0);

    uint64_t next_u64() { return gen_(); }

    /// Uniform on [0,1) with 53-bit resolution.
    double uniform01();

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal via Box-Muller; pairs are generated together and the
    /// second value is cached for the next call.
    double normal();

    /// Column-major fill (Eigen's storage order).
    Eigen::MatrixXd normal_matrix(Eigen::Index rows, Eigen::Index cols);
    Eigen::MatrixXd uniform_matrix(Eigen::Index rows, Eigen::Index cols, double lo, double hi);
    Eigen::VectorXd uniform_vector(Eigen::Index n, double lo, double hi);

private:
    std::mt19937_64 gen_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

/// The derived 64-bit seed for a named stream (exposed for documentation
/// and for seeding nested components deterministically).
uint64_t stream_seed(uint64_t master, std::string_view name, uint64_t salt = 0);

} // namespace disback::io
