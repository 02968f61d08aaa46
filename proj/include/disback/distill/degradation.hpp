#pragma once

#include "disback/diffusion/score_net.hpp"
#include "disback/distill/generator.hpp"

#include <cstdint>
#include <vector>

namespace disback::distill {

/// Ordered score-net checkpoints recorded while a teacher copy is fine-tuned
/// onto the untrained generator's distribution. Checkpoint 0 is the teacher
/// itself, bit for bit; the last checkpoint is the most degraded.
struct DegradationPath {
    struct Provenance {
        uint64_t teacher_id = 0;   // parameter fingerprint
        uint64_t generator_id = 0; // parameter fingerprint
        uint64_t seed = 0;
    };

    std::vector<diffusion::ScoreNetwork> checkpoints;
    int64_t interval = 0;
    Provenance provenance;

    int node_count() const { return static_cast<int>(checkpoints.size()); }
    void validate() const; // >= 2 checkpoints, interval >= 1
};

/// FNV-1a over the raw parameter payload; used as a provenance id.
uint64_t params_fingerprint(const nn::MlpParams& params);

/// Fine-tunes a copy of the teacher by DSM on generator samples, snapshotting
/// before training and then every `interval` steps, so
/// total_steps/interval + 1 checkpoints come back. Draw order per step:
/// latent batch, then t, then eps, all from the "degradation" stream of
/// `seed`. `interval` must divide total_steps.
DegradationPath record_degradation(const diffusion::ScoreNetwork& teacher,
                                   const GeneratorNetwork& gen0, int64_t total_steps,
                                   int64_t interval, double lr, int batch, uint64_t seed);

} // namespace disback::distill
