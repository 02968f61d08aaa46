#pragma once

#include "disback/nn/mlp.hpp"

#include <functional>

namespace disback::nn {

/// Central-difference gradient of a deterministic scalar function of the
/// parameters. O(2 * parameter_count) evaluations of f; test-oracle grade,
/// kept independent of the reverse-mode path it is used to check.
MlpGrads finite_diff_grad(const std::function<double(const MlpParams&)>& f,
                          const MlpParams& params, double step);

} // namespace disback::nn
