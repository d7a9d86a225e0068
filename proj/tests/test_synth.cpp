#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "netprio/errors.hpp"
#include "netprio/evaluation.hpp"
#include "netprio/knowledge.hpp"
#include "netprio/network.hpp"
#include "netprio/synth.hpp"
#include "support/oracles.hpp"

using namespace netprio;
using namespace netprio::testing;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SynthConfig small_config() {
    SynthConfig cfg;
    cfg.n_nodes = 60;
    cfg.n_seeds = 8;
    cfg.n_truth = 4;
    cfg.entities_per_channel = 4;
    cfg.rng_seed = 7;
    return cfg;
}

}  // namespace

TEST_CASE("identical configs produce byte-identical bundles") {
    TempDir d1, d2;
    const auto cfg = small_config();
    const auto b1 = generate(cfg, d1.path());
    const auto b2 = generate(cfg, d2.path());
    CHECK(slurp(b1.network) == slurp(b2.network));
    CHECK(slurp(b1.seeds) == slurp(b2.seeds));
    CHECK(slurp(b1.assoc_symptom) == slurp(b2.assoc_symptom));
    CHECK(slurp(b1.assoc_comorbid) == slurp(b2.assoc_comorbid));
    CHECK(slurp(b1.assoc_phenotype) == slurp(b2.assoc_phenotype));
    CHECK(slurp(b1.entity_ranking) == slurp(b2.entity_ranking));
    CHECK(slurp(b1.positions) == slurp(b2.positions));
}

TEST_CASE("a different seed changes the bundle") {
    TempDir d1, d2;
    auto cfg = small_config();
    const auto b1 = generate(cfg, d1.path());
    cfg.rng_seed = 8;
    const auto b2 = generate(cfg, d2.path());
    CHECK(slurp(b1.network) != slurp(b2.network));
}

TEST_CASE("generated bundles pass every loader") {
    TempDir dir;
    const auto cfg = small_config();
    const auto b = generate(cfg, dir.path());

    // No edge of the bundle falls below the default cutoff of weight_lo 0.2,
    // so the full node set survives loading.
    const auto net = load_network(b.network, {0.0, true});
    CHECK(net.node_count() == cfg.n_nodes);

    const auto seeds = load_seeds(b.seeds, net);
    CHECK(seeds.unmapped.empty());
    CHECK(seeds.seeds.size() == static_cast<std::size_t>(cfg.n_seeds));

    const auto symptom = load_associations(b.assoc_symptom, Method::symptom);
    const auto comorbid = load_associations(b.assoc_comorbid, Method::comorbid);
    const auto phenotype = load_associations(b.assoc_phenotype, Method::phenotype);
    CHECK(symptom.entries.size() == static_cast<std::size_t>(cfg.entities_per_channel));
    CHECK(comorbid.entries.size() == static_cast<std::size_t>(cfg.entities_per_channel));
    CHECK(phenotype.entries.size() == static_cast<std::size_t>(cfg.entities_per_channel));

    const auto ranking = load_entity_ranking(b.entity_ranking);
    CHECK(ranking.entries.size() == static_cast<std::size_t>(3 * cfg.entities_per_channel));

    const auto positions = load_positions(b.positions);
    CHECK(positions.rows().size() == static_cast<std::size_t>(cfg.n_nodes));
    CHECK(positions.duplicates_dropped() == 0);
}

TEST_CASE("the seed file lists the first genes of the naming scheme") {
    TempDir dir;
    const auto cfg = small_config();
    const auto b = generate(cfg, dir.path());
    const auto net = load_network(b.network, {0.0, true});
    const auto seeds = load_seeds(b.seeds, net);
    std::vector<std::string> got;
    for (const auto s : seeds.seeds.members) {
        got.push_back(net.symbol(s));
    }
    std::sort(got.begin(), got.end());
    // Zero-padded names sort numerically, so the seeds are G0000..G0007.
    CHECK(got.front() == "G0000");
    CHECK(got.back() == "G0007");
}

TEST_CASE("module genes are denser than the background across instances") {
    double module_mean = 0.0;
    double background_mean = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        TempDir dir;
        SynthConfig cfg;
        cfg.n_nodes = 120;
        cfg.n_seeds = 12;
        cfg.n_truth = 6;
        cfg.rng_seed = seed;
        const auto b = generate(cfg, dir.path());
        const auto net = load_network(b.network, {0.0, true});
        // Zero-padded names sort numerically: the module is G0000..G0017.
        for (std::int32_t i = 0; i < net.node_count(); ++i) {
            if (net.symbol(i) < "G0018") {
                module_mean += net.degree(i);
            } else {
                background_mean += net.degree(i);
            }
        }
    }
    module_mean /= 20.0 * 18.0;
    background_mean /= 20.0 * 102.0;
    CHECK(module_mean > 2.0 * background_mean);
}

TEST_CASE("infeasible configurations are rejected up front") {
    TempDir dir;
    SynthConfig cfg;

    cfg.n_nodes = 1;
    CHECK_THROWS_AS(generate(cfg, dir.path()), ValidationError);
    cfg = SynthConfig{};
    cfg.n_seeds = 1;
    CHECK_THROWS_AS(generate(cfg, dir.path()), ValidationError);
    cfg = SynthConfig{};
    cfg.n_nodes = 10;
    cfg.n_seeds = 8;
    cfg.n_truth = 5;
    CHECK_THROWS_AS(generate(cfg, dir.path()), ValidationError);
    cfg = SynthConfig{};
    cfg.module_edge_prob = 0.01;  // below the background default
    CHECK_THROWS_AS(generate(cfg, dir.path()), ValidationError);
    cfg = SynthConfig{};
    cfg.hit_prob_module = 0.01;
    CHECK_THROWS_AS(generate(cfg, dir.path()), ValidationError);
    cfg = SynthConfig{};
    cfg.weight_lo = 0.8;
    cfg.weight_hi = 0.5;
    CHECK_THROWS_AS(generate(cfg, dir.path()), ValidationError);
    cfg = SynthConfig{};
    cfg.weight_hi = 1.5;
    CHECK_THROWS_AS(generate(cfg, dir.path()), ValidationError);
    cfg = SynthConfig{};
    cfg.weight_lo = 1e-9;
    CHECK_THROWS_AS(generate(cfg, dir.path()), ValidationError);
    cfg = SynthConfig{};
    cfg.entities_per_channel = 0;
    CHECK_THROWS_AS(generate(cfg, dir.path()), ValidationError);
    cfg = SynthConfig{};
    cfg.chromosome_count = 0;
    CHECK_THROWS_AS(generate(cfg, dir.path()), ValidationError);
    cfg = SynthConfig{};
    cfg.background_edge_prob = -0.1;
    CHECK_THROWS_AS(generate(cfg, dir.path()), ValidationError);
}

TEST_CASE("a null config with no planted signal is valid") {
    TempDir dir;
    SynthConfig cfg;
    cfg.n_nodes = 80;
    cfg.n_seeds = 8;
    cfg.n_truth = 0;
    cfg.module_edge_prob = cfg.background_edge_prob = 0.05;
    cfg.hit_prob_module = cfg.hit_prob_background = 0.1;
    const auto b = generate(cfg, dir.path());
    const auto net = load_network(b.network, {0.0, true});
    CHECK(net.node_count() == 80);
}
