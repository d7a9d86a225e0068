#include "netprio/fusion.hpp"

#include <algorithm>
#include <unordered_set>

#include "netprio/errors.hpp"
#include "netprio/tsv.hpp"

namespace netprio {

const char* fusion_mode_name(FusionMode m) {
    return m == FusionMode::minmax ? "minmax" : "raw";
}

std::optional<FusionMode> fusion_mode_from_name(std::string_view name) {
    if (name == "minmax") return FusionMode::minmax;
    if (name == "raw") return FusionMode::raw;
    return std::nullopt;
}

std::vector<Method> all_components() {
    return {kComponentMethods, kComponentMethods + std::size(kComponentMethods)};
}

namespace {

const ScoreVector* find_component(std::span<const ScoreVector> vectors, Method tag) {
    for (const auto& v : vectors) {
        if (v.tag == tag) {
            return &v;
        }
    }
    return nullptr;
}

void validate_inputs(const Network& net, std::span<const ScoreVector> vectors,
                     const FusionConfig& cfg) {
    if (cfg.components.empty()) {
        throw ValidationError("fusion mask is empty");
    }
    std::unordered_set<int> mask_seen;
    for (const Method m : cfg.components) {
        if (m == Method::fused) {
            throw ValidationError("fused vectors cannot re-enter a fusion");
        }
        if (!mask_seen.insert(static_cast<int>(m)).second) {
            throw ValidationError(std::string("duplicate component '") + method_name(m) +
                                  "' in fusion mask");
        }
    }
    std::unordered_set<int> tag_seen;
    for (const auto& v : vectors) {
        if (!tag_seen.insert(static_cast<int>(v.tag)).second) {
            throw ValidationError(std::string("duplicate score vector tag '") +
                                  method_name(v.tag) + "'");
        }
        if (v.values.size() != static_cast<std::size_t>(net.node_count())) {
            throw ValidationError(std::string("score vector '") + method_name(v.tag) +
                                  "' is not aligned with the network");
        }
    }
    for (const Method m : cfg.components) {
        if (!find_component(vectors, m)) {
            throw ValidationError(std::string("fusion mask needs component '") +
                                  method_name(m) + "' but no such vector was given");
        }
    }
}

}  // namespace

std::vector<double> fused_values(const Network& net, std::span<const ScoreVector> vectors,
                                 const FusionConfig& cfg) {
    validate_inputs(net, vectors, cfg);
    std::vector<double> fused(static_cast<std::size_t>(net.node_count()), 0.0);
    for (const Method m : cfg.components) {
        const ScoreVector& v = *find_component(vectors, m);
        if (cfg.mode == FusionMode::raw) {
            kernels::add_scaled_shifted(fused, v.values, 0.0, 1.0);
            continue;
        }
        if (v.values.empty()) {
            continue;
        }
        const auto mm = kernels::min_max(v.values);
        if (mm.max > mm.min) {
            kernels::add_scaled_shifted(fused, v.values, mm.min, 1.0 / (mm.max - mm.min));
        }
        // A constant component carries no ordering information and
        // contributes zeros.
    }
    return fused;
}

Ranking fuse(const Network& net, std::span<const ScoreVector> vectors, const FusionConfig& cfg) {
    const std::vector<double> fused = fused_values(net, vectors, cfg);
    const std::vector<std::int32_t> order = descending_order(net, fused);

    Ranking ranking;
    ranking.entries.reserve(order.size());
    for (const std::int32_t idx : order) {
        ranking.entries.push_back(RankedGene{net.symbol(idx), fused[idx], 0});
    }
    // Pessimistic competition ranks: every member of a tie group takes
    // the group's worst position.
    std::size_t i = 0;
    while (i < ranking.entries.size()) {
        std::size_t j = i;
        while (j + 1 < ranking.entries.size() &&
               ranking.entries[j + 1].fused == ranking.entries[i].fused) {
            ++j;
        }
        for (std::size_t k = i; k <= j; ++k) {
            ranking.entries[k].rank = static_cast<std::int32_t>(j + 1);
        }
        i = j + 1;
    }
    return ranking;
}

std::vector<std::string> top_k(const Ranking& ranking, std::size_t k, const SeedSet* exclude,
                               const Network* net) {
    if (exclude != nullptr && net == nullptr) {
        throw ValidationError("seed exclusion needs the network for symbol lookup");
    }
    std::vector<std::string> out;
    for (const auto& entry : ranking.entries) {
        if (exclude != nullptr) {
            const auto idx = net->index_of(entry.symbol);
            if (idx && exclude->contains(*idx)) {
                continue;
            }
        }
        out.push_back(entry.symbol);
        if (k != 0 && out.size() == k) {
            break;
        }
    }
    return out;
}

void write_ranking_tsv(std::ostream& out, const Network& net, const Ranking& ranking,
                       std::span<const ScoreVector> vectors, const FusionConfig& cfg) {
    // Component columns in canonical order, restricted to the mask.
    std::vector<const ScoreVector*> columns;
    out << "# rank\tgene\tfused";
    for (const Method m : kComponentMethods) {
        if (std::find(cfg.components.begin(), cfg.components.end(), m) ==
            cfg.components.end()) {
            continue;
        }
        const ScoreVector* v = find_component(vectors, m);
        if (v == nullptr) {
            throw ValidationError(std::string("missing component vector '") + method_name(m) +
                                  "'");
        }
        columns.push_back(v);
        out << '\t' << method_name(m);
    }
    out << '\n';
    for (const auto& entry : ranking.entries) {
        const auto idx = net.index_of(entry.symbol);
        if (!idx) {
            throw ValidationError("ranking entry '" + entry.symbol +
                                  "' is not a network gene");
        }
        out << entry.rank << '\t' << entry.symbol << '\t' << format_score(entry.fused);
        for (const ScoreVector* v : columns) {
            out << '\t' << format_score(v->values[static_cast<std::size_t>(*idx)]);
        }
        out << '\n';
    }
}

std::vector<std::string> read_ranking_genes(const std::filesystem::path& path) {
    TsvReader reader(path);
    std::vector<std::string_view> fields;
    std::vector<std::string> genes;
    while (reader.next(fields)) {
        if (fields.size() < 2 || fields[1].empty()) {
            throw ParseError(reader.path(), reader.line_number(),
                             "expected rank<TAB>gene<TAB>scores...");
        }
        genes.emplace_back(fields[1]);
    }
    if (genes.empty()) {
        throw ValidationError("ranking file has no data rows (" + reader.path() + ")");
    }
    return genes;
}

}  // namespace netprio
