#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netprio/network.hpp"
#include "netprio/score.hpp"

namespace netprio {

enum class FusionMode {
    // Each component is rescaled to [0, 1] by (v - min) / (max - min)
    // before summation; a constant component contributes zeros.
    minmax,
    // Components are summed as-is.
    raw,
};

const char* fusion_mode_name(FusionMode m);
std::optional<FusionMode> fusion_mode_from_name(std::string_view name);

struct FusionConfig {
    FusionMode mode = FusionMode::minmax;
    // Components entering the sum; defaults to all six when empty is not
    // allowed, so callers pass an explicit mask.
    std::vector<Method> components;
};

// All six component methods, canonical order.
std::vector<Method> all_components();

struct RankedGene {
    std::string symbol;
    double fused = 0.0;
    // Pessimistic competition rank: tied genes all take the worst
    // (largest) rank of their tie group.
    std::int32_t rank = 0;
};

struct Ranking {
    std::vector<RankedGene> entries;  // fused descending, ties by symbol
};

// Sums the masked components over aligned score vectors and ranks every
// node. Vectors must carry distinct tags covering the mask and have one
// value per network node.
Ranking fuse(const Network& net, std::span<const ScoreVector> vectors, const FusionConfig& cfg);

// Fused values per node index (same combination `fuse` ranks).
std::vector<double> fused_values(const Network& net, std::span<const ScoreVector> vectors,
                                 const FusionConfig& cfg);

// First k symbols of the ranking; when `exclude` is given, seed genes are
// skipped so the list holds candidates only. k = 0 means no limit.
std::vector<std::string> top_k(const Ranking& ranking, std::size_t k,
                               const SeedSet* exclude = nullptr, const Network* net = nullptr);

// rank<TAB>gene<TAB>fused plus one column per masked component, components
// in canonical order. Header line prefixed with '#'.
void write_ranking_tsv(std::ostream& out, const Network& net, const Ranking& ranking,
                       std::span<const ScoreVector> vectors, const FusionConfig& cfg);

// Reads the gene column back from a ranking TSV (CLI analyze input).
std::vector<std::string> read_ranking_genes(const std::filesystem::path& path);

}  // namespace netprio
