#pragma once

#include <cstdint>
#include <filesystem>

namespace netprio {

// Planted-partition benchmark generator. A module of seed-like genes
// (the seeds plus a held-out truth set) is wired densely at
// module_edge_prob against a sparse background, and knowledge entities
// hit module genes with elevated probability. Setting the module
// parameters equal to the background ones produces a null bundle with no
// signal to recover.
struct SynthConfig {
    std::int32_t n_nodes = 300;
    std::int32_t n_seeds = 30;
    std::int32_t n_truth = 15;  // module genes beyond the seeds
    double background_edge_prob = 0.02;
    double module_edge_prob = 0.3;
    double weight_lo = 0.2;  // uniform edge weights in [lo, hi] in (0, 1]
    double weight_hi = 1.0;
    std::int32_t entities_per_channel = 10;
    double hit_prob_module = 0.6;
    double hit_prob_background = 0.05;
    std::int32_t chromosome_count = 2;
    std::uint64_t rng_seed = 1;
};

struct SynthBundle {
    std::filesystem::path network;
    std::filesystem::path seeds;
    std::filesystem::path assoc_symptom;
    std::filesystem::path assoc_comorbid;
    std::filesystem::path assoc_phenotype;
    std::filesystem::path entity_ranking;
    std::filesystem::path positions;
};

// Writes the full bundle into out_dir (created if missing). Identical
// configs produce byte-identical files. Throws ValidationError on
// infeasible configs and IoError on write failures.
SynthBundle generate(const SynthConfig& cfg, const std::filesystem::path& out_dir);

}  // namespace netprio
