#include <limits>

#include "common.hpp"
#include "netprio/errors.hpp"
#include "netprio/synth.hpp"

namespace netprio::cli {

namespace {

std::int32_t narrow(std::int64_t v, const char* flag) {
    if (v < std::numeric_limits<std::int32_t>::min() ||
        v > std::numeric_limits<std::int32_t>::max()) {
        throw ValidationError(std::string(flag) + " is out of range");
    }
    return static_cast<std::int32_t>(v);
}

}  // namespace

void run_generate(const GenerateCmd& cmd) {
    SynthConfig cfg;
    cfg.n_nodes = narrow(cmd.nodes, "--nodes");
    cfg.n_seeds = narrow(cmd.seeds, "--seeds");
    cfg.n_truth = narrow(cmd.truth, "--truth");
    cfg.background_edge_prob = cmd.background_prob;
    cfg.module_edge_prob = cmd.module_prob;
    cfg.weight_lo = cmd.weight_lo;
    cfg.weight_hi = cmd.weight_hi;
    cfg.entities_per_channel = narrow(cmd.entities, "--entities");
    cfg.hit_prob_module = cmd.hit_module;
    cfg.hit_prob_background = cmd.hit_background;
    cfg.chromosome_count = narrow(cmd.chromosomes, "--chromosomes");
    cfg.rng_seed = static_cast<std::uint64_t>(cmd.rng_seed);

    const SynthBundle bundle = generate(cfg, cmd.out);

    Manifest m("generate");
    m.set("nodes", cmd.nodes);
    m.set("seeds", cmd.seeds);
    m.set("truth", cmd.truth);
    m.set("background-prob", cmd.background_prob);
    m.set("module-prob", cmd.module_prob);
    m.set("weight-lo", cmd.weight_lo);
    m.set("weight-hi", cmd.weight_hi);
    m.set("entities", cmd.entities);
    m.set("hit-module", cmd.hit_module);
    m.set("hit-background", cmd.hit_background);
    m.set("chromosomes", cmd.chromosomes);
    m.set("rng-seed", cmd.rng_seed);
    m.set("out", cmd.out);
    m.set("output.network.sha256", sha256_file(bundle.network));
    m.set("output.seeds.sha256", sha256_file(bundle.seeds));
    m.set("output.symptom.sha256", sha256_file(bundle.assoc_symptom));
    m.set("output.comorbid.sha256", sha256_file(bundle.assoc_comorbid));
    m.set("output.phenotype.sha256", sha256_file(bundle.assoc_phenotype));
    m.set("output.entity_ranking.sha256", sha256_file(bundle.entity_ranking));
    m.set("output.positions.sha256", sha256_file(bundle.positions));
    m.write(std::filesystem::path(cmd.out) / "manifest.txt");
}

}  // namespace netprio::cli
