#include "disback/io/rng.hpp"

#include "disback/io/hash.hpp"

#include <cmath>
#include <numbers>

namespace disback::io {

uint64_t stream_seed(uint64_t master, std::string_view name, uint64_t salt) {
    uint64_t state = master ^ fnv1a64(name) ^ (salt * 0x9e3779b97f4a7c15ULL);
    return splitmix64(state);
}

RngStream::RngStream(uint64_t master, std::string_view name, uint64_t salt)
    : gen_(stream_seed(master, name, salt)) {}

double RngStream::uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double RngStream::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    // u1 in (0,1] so the log is finite.
    double u1 = 1.0 - uniform01();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
}

Eigen::MatrixXd RngStream::normal_matrix(Eigen::Index rows, Eigen::Index cols) {
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i)
            m(i, j) = normal();
    return m;
}

Eigen::MatrixXd RngStream::uniform_matrix(Eigen::Index rows, Eigen::Index cols, double lo, double hi) {
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i)
            m(i, j) = uniform(lo, hi);
    return m;
}

Eigen::VectorXd RngStream::uniform_vector(Eigen::Index n, double lo, double hi) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = uniform(lo, hi);
    return v;
}

} // namespace disback::io
