#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "netprio/diffusion.hpp"
#include "netprio/fusion.hpp"
#include "netprio/knowledge.hpp"
#include "netprio/network.hpp"

namespace netprio {

// End-to-end scoring configuration shared by the score and evaluate
// commands. Knowledge channels are optional; a missing channel scores
// zero everywhere.
struct PipelineOptions {
    std::filesystem::path network_path;
    std::filesystem::path seeds_path;
    // Indexed by knowledge channel: symptom, comorbid, phenotype.
    std::array<std::optional<std::filesystem::path>, 3> associations;
    std::array<std::optional<std::filesystem::path>, 3> rankings;
    std::size_t top_entities = 0;  // 0 = keep every ranked entity
    LoadOptions load;
    DiffusionConfig rwr;
    DiffusionConfig np;
    LengthMode sp_mode = LengthMode::hop;
    FusionMode fusion_mode = FusionMode::minmax;
    std::vector<Method> mask;  // empty = all six components
};

struct UnmappedAssociation {
    Method channel = Method::symptom;
    std::string entity;
    std::string gene;
};

struct PipelineData {
    Network network;
    SeedSet seeds;
    std::vector<std::string> unmapped_seeds;
    std::vector<AssociationTable> tables;      // loaded channels only
    std::array<ScoreVector, 3> knowledge;      // per channel, zeros when absent
    std::vector<UnmappedAssociation> unmapped;
    std::vector<std::string> warnings;
};

// Loads and validates every input named by the options, applies
// select_top where a ranking is supplied, and precomputes the
// seed-independent knowledge scores.
PipelineData load_pipeline(const PipelineOptions& opts);

// The six component score vectors for the given seed set, canonical
// order. Seeds may differ from data.seeds (cross-validation folds).
std::vector<ScoreVector> component_scores(const PipelineData& data, const SeedSet& seeds,
                                          const PipelineOptions& opts);

}  // namespace netprio
