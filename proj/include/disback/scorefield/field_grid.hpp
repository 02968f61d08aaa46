#pragma once

#include "disback/diffusion/score_net.hpp"

#include <Eigen/Dense>

namespace disback::scorefield {

/// Score vectors sampled on an evenly spaced square grid at one timestep.
/// Node order: x varies fastest, then y (node = iy * resolution + ix).
struct FieldGrid {
    double lo = -6.0;
    double hi = 6.0;
    int resolution = 0;
    double t = 0.5;
    Eigen::MatrixXd positions; // 2 x resolution^2
    Eigen::MatrixXd vectors;   // 2 x resolution^2
};

FieldGrid gradient_field_grid(const diffusion::ScoreFieldFn& field, double lo, double hi,
                              int resolution, double t);

/// Median over grid nodes of cos(angle between paired vectors); pairs where
/// either vector vanishes contribute 0.
double median_cosine_similarity(const FieldGrid& a, const FieldGrid& b);

/// Median over nodes of ||estimate - truth|| / ||truth|| (absolute error
/// where the true vector vanishes).
double median_relative_error(const FieldGrid& estimate, const FieldGrid& truth);

/// RMS of the central-difference curl (dv_y/dx - dv_x/dy) over interior
/// nodes. Diagnostic only: a learned field need not be a gradient field.
double curl_rms(const FieldGrid& grid);

} // namespace disback::scorefield
