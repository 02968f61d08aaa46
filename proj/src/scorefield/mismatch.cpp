#include "disback/scorefield/mismatch.hpp"

#include "disback/scorefield/stf.hpp"

#include <cmath>
#include <stdexcept>

namespace disback::scorefield {

double TDist::draw(io::RngStream& rng) const {
    switch (kind) {
        case Kind::Uniform:
            return rng.uniform(lo, hi);
        case Kind::Fixed:
            rng.uniform01(); // keep draw counts identical across modes
            return fixed;
    }
    throw std::logic_error("unknown TDist kind");
}

std::string TDist::describe() const {
    char buf[64];
    if (kind == Kind::Uniform)
        std::snprintf(buf, sizeof(buf), "t~U(%g,%g)", lo, hi);
    else
        std::snprintf(buf, sizeof(buf), "t=%g", fixed);
    return buf;
}

MismatchReport mismatch_score(const diffusion::ScoreFieldFn& net,
                              const diffusion::SamplerFn& assessed, const Reference& reference,
                              const diffusion::NoiseSchedule& schedule,
                              const MismatchOptions& options, io::RngStream& rng) {
    if (options.n_eval < 1)
        throw std::invalid_argument("mismatch_score: n_eval must be >= 1");

    const int n = options.n_eval;
    Eigen::MatrixXd x0 = assessed(n, rng);
    const auto dim = x0.rows();
    Eigen::VectorXd t(n);
    for (int i = 0; i < n; ++i) t(i) = options.t_dist.draw(rng);
    Eigen::MatrixXd eps = rng.normal_matrix(dim, n);

    Eigen::VectorXd sigma(n);
    for (int i = 0; i < n; ++i) sigma(i) = schedule.sigma_at(t(i));
    Eigen::MatrixXd x_t = diffusion::perturb(x0, sigma, eps);

    Eigen::MatrixXd predicted = net(x_t, t);
    for (Eigen::Index j = 0; j < predicted.cols(); ++j)
        if (!predicted.col(j).allFinite())
            throw std::runtime_error("mismatch_score: non-finite network output at sample " +
                                     std::to_string(j));

    Eigen::MatrixXd real(dim, n);
    if (const auto* mix = std::get_if<MixtureSpec>(&reference)) {
        for (int i = 0; i < n; ++i)
            real.col(i) = analytic_mixture_score(*mix, x_t.col(i), sigma(i));
    } else if (const auto* fixed = std::get_if<Eigen::MatrixXd>(&reference)) {
        real = stf_score_batch(*fixed, x_t, sigma);
    } else {
        const auto& src = std::get<ResampledReference>(reference);
        Eigen::MatrixXd batch = src.sampler(options.reference_size, rng);
        real = stf_score_batch(batch, x_t, sigma);
    }

    Eigen::VectorXd gaps = (predicted - real).colwise().norm();
    const double mean = gaps.mean();
    double var = 0.0;
    if (n > 1) var = (gaps.array() - mean).square().sum() / static_cast<double>(n - 1);

    MismatchReport report;
    report.d_mis = mean;
    report.std_dev = std::sqrt(var);
    report.n_samples = n;
    report.t_descriptor = options.t_dist.describe();
    return report;
}

} // namespace disback::scorefield
