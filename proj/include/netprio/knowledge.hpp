#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "netprio/network.hpp"
#include "netprio/score.hpp"

namespace netprio {

// Disease-knowledge channel: entities (diseases, phenotypes) with their
// associated gene sets. Entities keep first-appearance order; gene sets
// are sorted and de-duplicated.
struct AssociationTable {
    struct Entry {
        std::string entity;
        std::vector<std::string> genes;  // sorted, unique, non-empty
    };

    Method tag = Method::symptom;
    std::vector<Entry> entries;  // unique entity ids
};

// Loads entity<TAB>gene rows. Duplicate (entity, gene) pairs collapse;
// zero entities is a ValidationError.
AssociationTable load_associations(const std::filesystem::path& path, Method tag);

// Entities ranked by similarity to a query disease, descending. Input
// files may list rows out of order; loading re-sorts by (score
// descending, entity ascending).
struct EntityRanking {
    std::vector<std::pair<std::string, double>> entries;
};

EntityRanking load_entity_ranking(const std::filesystem::path& path);

// Restricts `table` to the k highest-similarity entities present in both
// the ranking and the table, in ranking order. Fewer than k available
// entities yields all of them (the caller can warn on the shortfall).
AssociationTable select_top(const EntityRanking& ranking, std::size_t k,
                            const AssociationTable& table);

struct CountScores {
    ScoreVector scores;
    // (entity, gene) pairs whose gene is absent from the network; counted
    // here so nothing is silently lost.
    std::vector<std::pair<std::string, std::string>> unmapped;
};

// score(g) = number of entities whose gene set contains g. A gene kept by
// four similar diseases scores four.
CountScores count_score(const Network& net, const AssociationTable& table);

}  // namespace netprio
