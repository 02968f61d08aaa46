#include "disback/diffusion/dsm.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace disback::diffusion {

namespace {

struct PerturbedBatch {
    Eigen::MatrixXd x_t;
    Eigen::MatrixXd target; // (x0 - x_t) / sigma^2
    Eigen::VectorXd sigma;
    Eigen::VectorXd weight; // sigma^2
};

PerturbedBatch make_batch(const NoiseSchedule& schedule, const Eigen::MatrixXd& x0,
                          const Eigen::VectorXd& t, const Eigen::MatrixXd& eps) {
    if (eps.rows() != x0.rows() || eps.cols() != x0.cols())
        throw std::invalid_argument("dsm: eps shape does not match x0");
    if (t.size() != x0.cols()) throw std::invalid_argument("dsm: one t per sample required");
    PerturbedBatch b;
    b.sigma.resize(t.size());
    for (Eigen::Index i = 0; i < t.size(); ++i) b.sigma(i) = schedule.sigma_at(t(i));
    b.x_t = perturb(x0, b.sigma, eps);
    // (x0 - x_t)/sigma^2 == -eps/sigma
    b.target = -eps * b.sigma.cwiseInverse().asDiagonal();
    b.weight = b.sigma.array().square();
    return b;
}

} // namespace

DsmResult dsm_loss_and_grads(const ScoreNetwork& net, const Eigen::MatrixXd& x0,
                             const Eigen::VectorXd& t, const Eigen::MatrixXd& eps) {
    const PerturbedBatch b = make_batch(net.schedule, x0, t, eps);
    const auto n = static_cast<double>(x0.cols());

    nn::ForwardCache cache;
    Eigen::MatrixXd out = score_eval(net, b.x_t, b.sigma, &cache);
    Eigen::MatrixXd resid = out - b.target;

    double loss = 0.0;
    for (Eigen::Index i = 0; i < resid.cols(); ++i) {
        const double contrib = b.weight(i) * resid.col(i).squaredNorm();
        if (!std::isfinite(contrib))
            throw std::runtime_error("dsm: non-finite loss contribution at sample " +
                                     std::to_string(i));
        loss += contrib;
    }
    loss /= n;

    // d loss / d out_i = 2 w_i resid_i / n
    Eigen::MatrixXd upstream = resid * (2.0 / n * b.weight).asDiagonal();
    nn::VjpResult vjp = mlp_vjp(net.params, cache, upstream);

    return DsmResult{loss, std::move(vjp.param_grads)};
}

double dsm_loss_for_field(const ScoreFieldFn& field, const NoiseSchedule& schedule,
                          const Eigen::MatrixXd& x0, const Eigen::VectorXd& t,
                          const Eigen::MatrixXd& eps) {
    const PerturbedBatch b = make_batch(schedule, x0, t, eps);
    Eigen::MatrixXd out = field(b.x_t, t);
    double loss = 0.0;
    for (Eigen::Index i = 0; i < out.cols(); ++i)
        loss += b.weight(i) * (out.col(i) - b.target.col(i)).squaredNorm();
    return loss / static_cast<double>(x0.cols());
}

TrainingDiverged::TrainingDiverged(int64_t at)
    : std::runtime_error("score training diverged at step " + std::to_string(at)), step(at) {}

ScoreNetwork train_score_network(const SamplerFn& sampler, const nn::MlpSpec& spec,
                                 const NoiseSchedule& schedule, const TrainOptions& options,
                                 LossTrace* trace) {
    if (options.steps < 1)
        throw std::invalid_argument("train_score_network: steps must be >= 1");
    schedule.validate();

    ScoreNetwork net;
    net.params = nn::mlp_init(spec, io::stream_seed(options.seed, "score-train-init"));
    net.schedule = schedule;
    net.validate();

    const int dim = net.data_dim();
    io::RngStream data(options.seed, "score-train-data");
    nn::AdamState adam = nn::AdamState::for_params(net.params, options.adam);

    for (int64_t step = 1; step <= options.steps; ++step) {
        Eigen::MatrixXd x0 = sampler(options.batch, data);
        if (x0.rows() != dim)
            throw std::invalid_argument("train_score_network: sampler dimension mismatch");
        Eigen::VectorXd t = data.uniform_vector(options.batch, schedule.t_min, 1.0);
        Eigen::MatrixXd eps = data.normal_matrix(dim, options.batch);

        DsmResult r;
        try {
            r = dsm_loss_and_grads(net, x0, t, eps);
            if (!std::isfinite(r.loss)) throw TrainingDiverged(step);
            nn::adam_step(adam, net.params, r.grads, options.lr);
        } catch (const TrainingDiverged&) {
            throw;
        } catch (const std::runtime_error&) {
            throw TrainingDiverged(step);
        }

        if (trace && (step % options.telemetry_every == 0 || step == options.steps))
            trace->emplace_back(step, r.loss);
    }
    return net;
}

} // namespace disback::diffusion
