#pragma once

#include "disback/diffusion/dsm.hpp"
#include "disback/diffusion/score_net.hpp"
#include "disback/scorefield/mixture.hpp"

#include <optional>
#include <string>
#include <variant>

namespace disback::scorefield {

/// Distribution of the evaluation timestep. Uniform matches training;
/// Fixed gives per-noise-level diagnostic curves.
struct TDist {
    enum class Kind { Uniform, Fixed };
    Kind kind = Kind::Uniform;
    double lo = 0.02;
    double hi = 1.0;
    double fixed = 0.5;

    double draw(io::RngStream& rng) const;
    std::string describe() const;
};

/// How the reference score is obtained: exactly (analytic mixture), by STF
/// over a fixed clean batch, or by STF over a batch resampled fresh from a
/// source at every evaluation.
struct ResampledReference {
    diffusion::SamplerFn sampler;
};
using Reference = std::variant<MixtureSpec, Eigen::MatrixXd, ResampledReference>;

struct MismatchOptions {
    int n_eval = 1024;
    int reference_size = 4096;
    TDist t_dist = {};
};

struct MismatchReport {
    double d_mis = 0.0;  // mean L2 gap
    double std_dev = 0.0; // across evaluation samples
    int n_samples = 0;
    std::string t_descriptor;
    std::optional<double> lower_bound; // same metric on training data, if computed
};

/// d_mis = E_{x0 ~ assessed, t, eps} || net(x_t, t) - s_ref(x_t, t) ||_2
/// with x_t = x0 + sigma_t eps. Draw order: assessed batch, then t, then eps,
/// then the reference batch when resampled.
MismatchReport mismatch_score(const diffusion::ScoreFieldFn& net,
                              const diffusion::SamplerFn& assessed, const Reference& reference,
                              const diffusion::NoiseSchedule& schedule,
                              const MismatchOptions& options, io::RngStream& rng);

} // namespace disback::scorefield
