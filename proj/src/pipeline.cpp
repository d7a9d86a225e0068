#include "netprio/pipeline.hpp"

#include <string>
#include <utility>

#include "netprio/errors.hpp"

namespace netprio {

namespace {

Method channel_method(std::size_t channel) { return kComponentMethods[3 + channel]; }

}  // namespace

PipelineData load_pipeline(const PipelineOptions& opts) {
    PipelineData data;
    data.network = load_network(opts.network_path, opts.load);

    SeedLoadResult seed_result = load_seeds(opts.seeds_path, data.network);
    data.seeds = std::move(seed_result.seeds);
    data.unmapped_seeds = std::move(seed_result.unmapped);
    for (const auto& symbol : data.unmapped_seeds) {
        data.warnings.push_back("seed gene '" + symbol + "' is not in the network");
    }

    for (std::size_t c = 0; c < 3; ++c) {
        const Method tag = channel_method(c);
        data.knowledge[c] = zero_scores(tag, data.network.node_count());
        if (!opts.associations[c]) {
            if (opts.rankings[c]) {
                throw ValidationError(std::string("entity ranking for the ") +
                                      method_name(tag) +
                                      " channel needs its association file");
            }
            continue;
        }
        AssociationTable table = load_associations(*opts.associations[c], tag);
        if (opts.rankings[c]) {
            const EntityRanking ranking = load_entity_ranking(*opts.rankings[c]);
            const std::size_t k =
                opts.top_entities == 0 ? ranking.entries.size() : opts.top_entities;
            AssociationTable selected = select_top(ranking, k, table);
            if (selected.entries.size() < k) {
                data.warnings.push_back(
                    std::string(method_name(tag)) + " channel: only " +
                    std::to_string(selected.entries.size()) + " of the requested " +
                    std::to_string(k) + " ranked entities have gene associations");
            }
            table = std::move(selected);
        }
        CountScores counts = count_score(data.network, table);
        if (!counts.unmapped.empty()) {
            data.warnings.push_back(std::string(method_name(tag)) + " channel: " +
                                    std::to_string(counts.unmapped.size()) +
                                    " gene associations fall outside the network");
        }
        for (auto& [entity, gene] : counts.unmapped) {
            data.unmapped.push_back(
                UnmappedAssociation{tag, std::move(entity), std::move(gene)});
        }
        data.knowledge[c] = std::move(counts.scores);
        data.tables.push_back(std::move(table));
    }
    return data;
}

std::vector<ScoreVector> component_scores(const PipelineData& data, const SeedSet& seeds,
                                          const PipelineOptions& opts) {
    std::vector<ScoreVector> out;
    out.reserve(6);
    out.push_back(rwr_score(data.network, seeds, opts.rwr).scores);
    out.push_back(np_score(data.network, seeds, opts.np).scores);
    out.push_back(sp_score(shortest_distances(data.network, seeds, opts.sp_mode)));
    for (const auto& channel : data.knowledge) {
        out.push_back(channel);
    }
    return out;
}

}  // namespace netprio
