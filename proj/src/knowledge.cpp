#include "netprio/knowledge.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "netprio/errors.hpp"
#include "netprio/tsv.hpp"

namespace netprio {

AssociationTable load_associations(const std::filesystem::path& path, Method tag) {
    if (!knowledge_channel(tag)) {
        throw ValidationError("association tables carry a knowledge-channel tag");
    }
    TsvReader reader(path);
    std::vector<std::string_view> fields;

    AssociationTable table;
    table.tag = tag;
    std::unordered_map<std::string, std::size_t> index;  // entity -> entry slot

    while (reader.next(fields)) {
        if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
            throw ParseError(reader.path(), reader.line_number(),
                             "expected entity<TAB>gene");
        }
        const std::string entity(fields[0]);
        auto [it, inserted] = index.emplace(entity, table.entries.size());
        if (inserted) {
            table.entries.push_back({entity, {}});
        }
        table.entries[it->second].genes.emplace_back(fields[1]);
    }
    if (table.entries.empty()) {
        throw ValidationError("association table has no entities (" + reader.path() + ")");
    }
    for (auto& entry : table.entries) {
        std::sort(entry.genes.begin(), entry.genes.end());
        entry.genes.erase(std::unique(entry.genes.begin(), entry.genes.end()),
                          entry.genes.end());
    }
    return table;
}

EntityRanking load_entity_ranking(const std::filesystem::path& path) {
    TsvReader reader(path);
    std::vector<std::string_view> fields;

    EntityRanking ranking;
    std::unordered_set<std::string> seen;
    while (reader.next(fields)) {
        if (fields.size() != 2 || fields[0].empty()) {
            throw ParseError(reader.path(), reader.line_number(),
                             "expected entity<TAB>similarity_score");
        }
        const std::string entity(fields[0]);
        if (!seen.insert(entity).second) {
            throw ValidationError(reader.path(), reader.line_number(),
                                  "duplicate entity '" + entity + "'");
        }
        const double score =
            parse_double_field(fields[1], reader.path(), reader.line_number());
        ranking.entries.emplace_back(entity, score);
    }
    if (ranking.entries.empty()) {
        throw ValidationError("entity ranking is empty (" + reader.path() + ")");
    }
    // Source rows may be listed out of order; the ranking is defined by
    // the scores.
    std::stable_sort(ranking.entries.begin(), ranking.entries.end(),
                     [](const auto& l, const auto& r) {
                         if (l.second != r.second) return l.second > r.second;
                         return l.first < r.first;
                     });
    return ranking;
}

AssociationTable select_top(const EntityRanking& ranking, std::size_t k,
                            const AssociationTable& table) {
    if (k == 0) {
        throw ValidationError("select_top needs k >= 1");
    }
    std::unordered_map<std::string, const AssociationTable::Entry*> lookup;
    lookup.reserve(table.entries.size());
    for (const auto& entry : table.entries) {
        lookup.emplace(entry.entity, &entry);
    }

    AssociationTable out;
    out.tag = table.tag;
    for (const auto& [entity, score] : ranking.entries) {
        (void)score;
        const auto it = lookup.find(entity);
        if (it == lookup.end()) {
            continue;
        }
        out.entries.push_back(*it->second);
        if (out.entries.size() == k) {
            break;
        }
    }
    return out;
}

CountScores count_score(const Network& net, const AssociationTable& table) {
    CountScores out;
    out.scores = zero_scores(table.tag, net.node_count());
    for (const auto& entry : table.entries) {
        for (const auto& gene : entry.genes) {
            if (const auto idx = net.index_of(gene)) {
                out.scores.values[static_cast<std::size_t>(*idx)] += 1.0;
            } else {
                out.unmapped.emplace_back(entry.entity, gene);
            }
        }
    }
    return out;
}

}  // namespace netprio
