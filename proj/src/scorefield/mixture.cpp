#include "disback/scorefield/mixture.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace disback::scorefield {

void MixtureSpec::validate() const {
    if (components.empty())
        throw std::invalid_argument("MixtureSpec: at least one component required");
    double wsum = 0.0;
    for (const auto& c : components) {
        if (!(c.variance > 0.0))
            throw std::invalid_argument("MixtureSpec: variances must be positive");
        if (!(c.weight > 0.0))
            throw std::invalid_argument("MixtureSpec: weights must be positive");
        wsum += c.weight;
    }
    if (std::abs(wsum - 1.0) > 1e-12)
        throw std::invalid_argument("MixtureSpec: weights must sum to 1 within 1e-12");
}

namespace {

// log of the unnormalized responsibility terms; the -log(2*pi) constant is
// omitted (it cancels in the softmax and is reinstated by the density).
double log_component_term(const MixtureComponent& c, const Eigen::Vector2d& x, double s2) {
    const double dist2 = (x - c.mean).squaredNorm();
    return std::log(c.weight) - std::log(s2) - 0.5 * dist2 / s2;
}

} // namespace

Eigen::Vector2d analytic_mixture_score(const MixtureSpec& mix, const Eigen::Vector2d& x,
                                       double sigma_t) {
    if (sigma_t < 0.0) throw std::domain_error("analytic_mixture_score: sigma_t must be >= 0");
    const size_t k = mix.components.size();
    std::vector<double> logs(k);
    double max_log = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < k; ++i) {
        const double s2 = mix.components[i].variance + sigma_t * sigma_t;
        logs[i] = log_component_term(mix.components[i], x, s2);
        max_log = std::max(max_log, logs[i]);
    }
    double denom = 0.0;
    for (size_t i = 0; i < k; ++i) denom += std::exp(logs[i] - max_log);

    Eigen::Vector2d score = Eigen::Vector2d::Zero();
    for (size_t i = 0; i < k; ++i) {
        const double s2 = mix.components[i].variance + sigma_t * sigma_t;
        const double resp = std::exp(logs[i] - max_log) / denom;
        score += resp * (mix.components[i].mean - x) / s2;
    }
    return score;
}

double mixture_log_density(const MixtureSpec& mix, const Eigen::Vector2d& x, double sigma_t) {
    const size_t k = mix.components.size();
    double max_log = -std::numeric_limits<double>::infinity();
    std::vector<double> logs(k);
    for (size_t i = 0; i < k; ++i) {
        const double s2 = mix.components[i].variance + sigma_t * sigma_t;
        logs[i] = log_component_term(mix.components[i], x, s2);
        max_log = std::max(max_log, logs[i]);
    }
    double sum = 0.0;
    for (size_t i = 0; i < k; ++i) sum += std::exp(logs[i] - max_log);
    return max_log + std::log(sum) - std::log(2.0 * std::numbers::pi);
}

Eigen::MatrixXd sample_mixture(const MixtureSpec& mix, int n, io::RngStream& rng) {
    mix.validate();
    Eigen::MatrixXd out(2, n);
    for (int j = 0; j < n; ++j) {
        const double u = rng.uniform01();
        double acc = 0.0;
        size_t pick = mix.components.size() - 1;
        for (size_t i = 0; i < mix.components.size(); ++i) {
            acc += mix.components[i].weight;
            if (u < acc) {
                pick = i;
                break;
            }
        }
        const auto& c = mix.components[pick];
        const double sd = std::sqrt(c.variance);
        out(0, j) = c.mean.x() + sd * rng.normal();
        out(1, j) = c.mean.y() + sd * rng.normal();
    }
    return out;
}

MixtureSpec make_benchmark_mixture(int components, uint64_t seed, double mean_range,
                                   double sigma_lo, double sigma_hi) {
    if (components < 1)
        throw std::invalid_argument("make_benchmark_mixture: need >= 1 component");
    io::RngStream rng(seed, "mixture");
    MixtureSpec mix;
    for (int i = 0; i < components; ++i) {
        MixtureComponent c;
        c.mean.x() = rng.uniform(-mean_range, mean_range);
        c.mean.y() = rng.uniform(-mean_range, mean_range);
        const double sd = rng.uniform(sigma_lo, sigma_hi);
        c.variance = sd * sd;
        c.weight = 1.0 / static_cast<double>(components);
        mix.components.push_back(c);
    }
    mix.validate();
    return mix;
}

} // namespace disback::scorefield
