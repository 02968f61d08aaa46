#include "disback/scorefield/field_grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace disback::scorefield {

namespace {

double median(std::vector<double> v) {
    if (v.empty()) throw std::invalid_argument("median of empty set");
    const size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + mid, v.end());
    double m = v[mid];
    if (v.size() % 2 == 0) {
        std::nth_element(v.begin(), v.begin() + mid - 1, v.begin() + mid);
        m = 0.5 * (m + v[mid - 1]);
    }
    return m;
}

void check_paired(const FieldGrid& a, const FieldGrid& b) {
    if (a.resolution != b.resolution || a.vectors.cols() != b.vectors.cols())
        throw std::invalid_argument("field grids are not paired");
}

} // namespace

FieldGrid gradient_field_grid(const diffusion::ScoreFieldFn& field, double lo, double hi,
                              int resolution, double t) {
    if (!(lo < hi)) throw std::domain_error("gradient_field_grid: lo must be < hi");
    if (resolution < 2)
        throw std::invalid_argument("gradient_field_grid: resolution must be >= 2");

    FieldGrid g;
    g.lo = lo;
    g.hi = hi;
    g.resolution = resolution;
    g.t = t;
    const int n = resolution * resolution;
    g.positions.resize(2, n);
    const double h = (hi - lo) / (resolution - 1);
    for (int iy = 0; iy < resolution; ++iy)
        for (int ix = 0; ix < resolution; ++ix) {
            const int node = iy * resolution + ix;
            g.positions(0, node) = lo + ix * h;
            g.positions(1, node) = lo + iy * h;
        }
    g.vectors = field(g.positions, Eigen::VectorXd::Constant(n, t));
    return g;
}

double median_cosine_similarity(const FieldGrid& a, const FieldGrid& b) {
    check_paired(a, b);
    std::vector<double> cos(a.vectors.cols());
    for (Eigen::Index i = 0; i < a.vectors.cols(); ++i) {
        const double na = a.vectors.col(i).norm();
        const double nb = b.vectors.col(i).norm();
        cos[i] = (na == 0.0 || nb == 0.0) ? 0.0 : a.vectors.col(i).dot(b.vectors.col(i)) / (na * nb);
    }
    return median(std::move(cos));
}

double median_relative_error(const FieldGrid& estimate, const FieldGrid& truth) {
    check_paired(estimate, truth);
    std::vector<double> err(truth.vectors.cols());
    for (Eigen::Index i = 0; i < truth.vectors.cols(); ++i) {
        const double scale = truth.vectors.col(i).norm();
        const double gap = (estimate.vectors.col(i) - truth.vectors.col(i)).norm();
        err[i] = scale == 0.0 ? gap : gap / scale;
    }
    return median(std::move(err));
}

double curl_rms(const FieldGrid& grid) {
    const int r = grid.resolution;
    if (r < 3) throw std::invalid_argument("curl_rms: resolution must be >= 3");
    const double h = (grid.hi - grid.lo) / (r - 1);
    double sum2 = 0.0;
    int count = 0;
    auto vx = [&](int ix, int iy) { return grid.vectors(0, iy * r + ix); };
    auto vy = [&](int ix, int iy) { return grid.vectors(1, iy * r + ix); };
    for (int iy = 1; iy + 1 < r; ++iy)
        for (int ix = 1; ix + 1 < r; ++ix) {
            const double dvy_dx = (vy(ix + 1, iy) - vy(ix - 1, iy)) / (2.0 * h);
            const double dvx_dy = (vx(ix, iy + 1) - vx(ix, iy - 1)) / (2.0 * h);
            const double c = dvy_dx - dvx_dy;
            sum2 += c * c;
            ++count;
        }
    return std::sqrt(sum2 / count);
}

} // namespace disback::scorefield
