#include "netprio/synth.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "netprio/errors.hpp"
#include "netprio/rng.hpp"
#include "netprio/tsv.hpp"

namespace netprio {

namespace {

std::string gene_name(std::int32_t i, int width) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "G%0*d", width, i);
    return buf;
}

std::string entity_name(const char* prefix, std::int32_t i) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%s%02d", prefix, i);
    return buf;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) {
        throw IoError("write failed for '" + path.string() + "'");
    }
}

void require(bool ok, const char* message) {
    if (!ok) {
        throw ValidationError(message);
    }
}

bool is_prob(double p) { return p >= 0.0 && p <= 1.0; }

}  // namespace

SynthBundle generate(const SynthConfig& cfg, const std::filesystem::path& out_dir) {
    require(cfg.n_nodes >= 2, "n_nodes must be >= 2");
    require(cfg.n_seeds >= 2, "n_seeds must be >= 2");
    require(cfg.n_truth >= 0, "n_truth must be >= 0");
    require(cfg.n_seeds + cfg.n_truth <= cfg.n_nodes,
            "n_seeds + n_truth must not exceed n_nodes");
    require(is_prob(cfg.background_edge_prob) && is_prob(cfg.module_edge_prob),
            "edge probabilities must lie in [0, 1]");
    require(cfg.module_edge_prob >= cfg.background_edge_prob,
            "module_edge_prob must be >= background_edge_prob");
    require(is_prob(cfg.hit_prob_background) && is_prob(cfg.hit_prob_module),
            "hit probabilities must lie in [0, 1]");
    require(cfg.hit_prob_module >= cfg.hit_prob_background,
            "hit_prob_module must be >= hit_prob_background");
    // Weights are written with 6 decimals, so the floor keeps them positive.
    require(cfg.weight_lo >= 1e-6 && cfg.weight_lo <= cfg.weight_hi && cfg.weight_hi <= 1.0,
            "edge weights must satisfy 1e-6 <= weight_lo <= weight_hi <= 1");
    require(cfg.entities_per_channel >= 1, "entities_per_channel must be >= 1");
    require(cfg.chromosome_count >= 1, "chromosome_count must be >= 1");

    Rng rng(cfg.rng_seed);
    const std::int32_t n = cfg.n_nodes;
    const std::int32_t module_size = cfg.n_seeds + cfg.n_truth;
    const auto in_module = [&](std::int32_t g) { return g < module_size; };

    int width = 4;
    for (std::int32_t v = n - 1; v >= 10000; v /= 10) {
        ++width;
    }
    std::vector<std::string> names(static_cast<std::size_t>(n));
    for (std::int32_t i = 0; i < n; ++i) {
        names[static_cast<std::size_t>(i)] = gene_name(i, width);
    }

    struct GenEdge {
        std::int32_t a;
        std::int32_t b;
        double w;
    };
    std::vector<GenEdge> edges;
    std::vector<std::int32_t> degree(static_cast<std::size_t>(n), 0);
    for (std::int32_t i = 0; i < n; ++i) {
        for (std::int32_t j = i + 1; j < n; ++j) {
            const double p = in_module(i) && in_module(j) ? cfg.module_edge_prob
                                                          : cfg.background_edge_prob;
            if (rng.uniform() < p) {
                edges.push_back({i, j, rng.uniform(cfg.weight_lo, cfg.weight_hi)});
                ++degree[static_cast<std::size_t>(i)];
                ++degree[static_cast<std::size_t>(j)];
            }
        }
    }
    // Patch isolated nodes so the loaded network never rejects the bundle.
    for (std::int32_t u = 0; u < n; ++u) {
        if (degree[static_cast<std::size_t>(u)] != 0) {
            continue;
        }
        auto v = static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(n - 1)));
        if (v >= u) {
            ++v;
        }
        edges.push_back({std::min(u, v), std::max(u, v),
                         rng.uniform(cfg.weight_lo, cfg.weight_hi)});
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
    }

    std::filesystem::create_directories(out_dir);
    SynthBundle bundle;

    bundle.network = out_dir / "network.tsv";
    {
        auto out = open_out(bundle.network);
        out << "# gene_a\tgene_b\tweight\n";
        for (const auto& e : edges) {
            out << names[static_cast<std::size_t>(e.a)] << '\t'
                << names[static_cast<std::size_t>(e.b)] << '\t' << format_fixed(e.w, 6)
                << '\n';
        }
        finish(out, bundle.network);
    }

    bundle.seeds = out_dir / "seeds.tsv";
    {
        auto out = open_out(bundle.seeds);
        out << "# gene\n";
        for (std::int32_t i = 0; i < cfg.n_seeds; ++i) {
            out << names[static_cast<std::size_t>(i)] << '\n';
        }
        finish(out, bundle.seeds);
    }

    const auto write_assoc = [&](const std::filesystem::path& path, const char* prefix) {
        auto out = open_out(path);
        out << "# entity\tgene\n";
        for (std::int32_t e = 0; e < cfg.entities_per_channel; ++e) {
            const std::string entity = entity_name(prefix, e);
            std::vector<std::int32_t> hits;
            for (std::int32_t g = 0; g < n; ++g) {
                const double p =
                    in_module(g) ? cfg.hit_prob_module : cfg.hit_prob_background;
                if (rng.uniform() < p) {
                    hits.push_back(g);
                }
            }
            if (hits.empty()) {
                // Every entity must map at least one gene.
                hits.push_back(
                    static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(module_size))));
            }
            for (const std::int32_t g : hits) {
                out << entity << '\t' << names[static_cast<std::size_t>(g)] << '\n';
            }
        }
        finish(out, path);
    };
    bundle.assoc_symptom = out_dir / "symptom.tsv";
    write_assoc(bundle.assoc_symptom, "SD");
    bundle.assoc_comorbid = out_dir / "comorbid.tsv";
    write_assoc(bundle.assoc_comorbid, "CD");
    bundle.assoc_phenotype = out_dir / "phenotype.tsv";
    write_assoc(bundle.assoc_phenotype, "PH");

    bundle.entity_ranking = out_dir / "entity_ranking.tsv";
    {
        auto out = open_out(bundle.entity_ranking);
        out << "# entity\tscore\n";
        for (const char* prefix : {"SD", "CD", "PH"}) {
            for (std::int32_t e = 0; e < cfg.entities_per_channel; ++e) {
                out << entity_name(prefix, e) << '\t' << format_fixed(rng.uniform(), 6)
                    << '\n';
            }
        }
        finish(out, bundle.entity_ranking);
    }

    bundle.positions = out_dir / "positions.tsv";
    {
        auto out = open_out(bundle.positions);
        out << "# gene\tchromosome\tposition_bp\n";
        for (std::int32_t g = 0; g < n; ++g) {
            const auto chrom =
                rng.below(static_cast<std::uint64_t>(cfg.chromosome_count)) + 1;
            const std::uint64_t pos = rng.below(250000000);
            out << names[static_cast<std::size_t>(g)] << "\tchr" << chrom << '\t' << pos
                << '\n';
        }
        finish(out, bundle.positions);
    }

    return bundle;
}

}  // namespace netprio
