#pragma once

#include "disback/nn/mlp.hpp"

#include <cstdint>

namespace disback::nn {

struct AdamConfig {
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;

    bool operator==(const AdamConfig&) const = default;
};

/// First/second-moment accumulators, shape-matched to the tracked params.
struct AdamState {
    MlpGrads m;
    MlpGrads v;
    int64_t step = 0;
    AdamConfig config;

    static AdamState for_params(const MlpParams& params, AdamConfig config = {});
};

/// One Adam update with bias correction, in place. The step counter is
/// incremented exactly once. Non-finite grads reject the whole update.
void adam_step(AdamState& state, MlpParams& params, const MlpGrads& grads, double lr);

} // namespace disback::nn
