#include <algorithm>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "netprio/errors.hpp"
#include "netprio/knowledge.hpp"
#include "netprio/network.hpp"
#include "netprio/rng.hpp"
#include "netprio/tsv.hpp"
#include "support/oracles.hpp"

using namespace netprio;
using namespace netprio::testing;

namespace {

std::filesystem::path write_file(const TempDir& dir, const std::string& name,
                                 const std::string& text) {
    const auto p = dir.path() / name;
    std::ofstream out(p);
    out << text;
    return p;
}

Network four_gene_net() {
    return Network::build({"g1", "g2", "g3", "g4"},
                          {{0, 1, 0.5}, {1, 2, 0.5}, {2, 3, 0.5}});
}

AssociationTable table_of(Method tag,
                          std::vector<std::pair<std::string, std::vector<std::string>>> rows) {
    AssociationTable t;
    t.tag = tag;
    for (auto& [entity, genes] : rows) {
        std::sort(genes.begin(), genes.end());
        t.entries.push_back({entity, genes});
    }
    return t;
}

}  // namespace

TEST_CASE("association rows group by entity and de-duplicate") {
    TempDir dir;
    const auto p = write_file(dir, "assoc.tsv",
                              "# entity\tgene\n"
                              "D1\tg1\n"
                              "D1\tg2\n"
                              "D2\tg1\n"
                              "D1\tg1\n");
    const auto t = load_associations(p, Method::symptom);
    REQUIRE(t.entries.size() == 2);
    CHECK(t.entries[0].entity == "D1");
    CHECK(t.entries[0].genes == std::vector<std::string>{"g1", "g2"});
    CHECK(t.entries[1].genes == std::vector<std::string>{"g1"});
}

TEST_CASE("association loading rejects empty tables and bad rows") {
    TempDir dir;
    CHECK_THROWS_AS(load_associations(write_file(dir, "e.tsv", "# none\n"), Method::comorbid),
                    ValidationError);
    CHECK_THROWS_AS(load_associations(write_file(dir, "bad.tsv", "D1\n"), Method::comorbid),
                    ParseError);
    CHECK_THROWS_AS(load_associations(write_file(dir, "ok.tsv", "D1\tg1\n"), Method::fused),
                    ValidationError);
}

TEST_CASE("a gene kept by four entities counts four") {
    const auto net = four_gene_net();
    const auto t = table_of(Method::symptom, {{"D1", {"g1", "g2"}},
                                              {"D2", {"g1"}},
                                              {"D3", {"g1", "g3"}},
                                              {"D4", {"g1"}}});
    const auto c = count_score(net, t);
    CHECK(c.scores.tag == Method::symptom);
    CHECK(c.scores.values == std::vector<double>{4.0, 1.0, 1.0, 0.0});
    CHECK(c.unmapped.empty());
}

TEST_CASE("count scores are bounded by the entity count") {
    Rng rng(41);
    const auto net = four_gene_net();
    for (int trial = 0; trial < 10; ++trial) {
        AssociationTable t;
        t.tag = Method::phenotype;
        const auto n_entities = 1 + rng.below(6);
        for (std::uint64_t e = 0; e < n_entities; ++e) {
            AssociationTable::Entry entry{"D" + std::to_string(e), {}};
            for (const auto& g : net.symbols()) {
                if (rng.uniform() < 0.5) entry.genes.push_back(g);
            }
            if (entry.genes.empty()) entry.genes.push_back("g1");
            t.entries.push_back(entry);
        }
        const auto c = count_score(net, t);
        for (double v : c.scores.values) {
            CHECK(v >= 0.0);
            CHECK(v <= static_cast<double>(n_entities));
        }
    }
}

TEST_CASE("entity order does not change count scores") {
    const auto net = four_gene_net();
    auto t = table_of(Method::comorbid,
                      {{"D1", {"g1", "g2"}}, {"D2", {"g2"}}, {"D3", {"g3", "g4"}}});
    const auto before = count_score(net, t).scores.values;
    std::reverse(t.entries.begin(), t.entries.end());
    CHECK(count_score(net, t).scores.values == before);
}

TEST_CASE("counts add over disjoint entity sets") {
    const auto net = four_gene_net();
    const auto t1 = table_of(Method::symptom, {{"D1", {"g1", "g3"}}, {"D2", {"g1"}}});
    const auto t2 = table_of(Method::symptom, {{"D3", {"g2", "g3"}}});
    auto both = t1;
    both.entries.insert(both.entries.end(), t2.entries.begin(), t2.entries.end());
    const auto a = count_score(net, t1).scores.values;
    const auto b = count_score(net, t2).scores.values;
    const auto c = count_score(net, both).scores.values;
    for (std::size_t i = 0; i < c.size(); ++i) {
        CHECK(c[i] == a[i] + b[i]);
    }
}

TEST_CASE("genes outside the network are reported, not counted") {
    const auto net = four_gene_net();
    const auto t = table_of(Method::symptom, {{"D1", {"g1", "zz"}}});
    const auto c = count_score(net, t);
    CHECK(c.scores.values[0] == 1.0);
    REQUIRE(c.unmapped.size() == 1);
    CHECK(c.unmapped[0].first == "D1");
    CHECK(c.unmapped[0].second == "zz");
}

TEST_CASE("entity rankings re-sort rows listed out of score order") {
    TempDir dir;
    const auto p = write_file(dir, "rank.tsv",
                              "A\t0.9\n"
                              "B\t0.2\n"
                              "C\t0.5\n"
                              "D\t0.5\n");
    const auto r = load_entity_ranking(p);
    REQUIRE(r.entries.size() == 4);
    CHECK(r.entries[0].first == "A");
    CHECK(r.entries[1].first == "C");  // 0.5 tie breaks by entity name
    CHECK(r.entries[2].first == "D");
    CHECK(r.entries[3].first == "B");

    CHECK_THROWS_AS(load_entity_ranking(write_file(dir, "dup.tsv", "A\t0.9\nA\t0.3\n")),
                    ValidationError);
    CHECK_THROWS_AS(load_entity_ranking(write_file(dir, "empty.tsv", "#\n")), ValidationError);
}

TEST_CASE("select_top keeps the k best-ranked entities that have gene sets") {
    TempDir dir;
    const auto r = load_entity_ranking(write_file(dir, "rank.tsv",
                                                  "A\t0.9\n"
                                                  "B\t0.8\n"
                                                  "C\t0.7\n"
                                                  "D\t0.6\n"));
    const auto t = table_of(Method::symptom,
                            {{"D", {"g4"}}, {"A", {"g1"}}, {"C", {"g3"}}});
    const auto top2 = select_top(r, 2, t);
    REQUIRE(top2.entries.size() == 2);
    CHECK(top2.entries[0].entity == "A");
    CHECK(top2.entries[1].entity == "C");  // B has no gene set, C moves up

    const auto all = select_top(r, 10, t);
    CHECK(all.entries.size() == 3);  // shortfall: only 3 available
    CHECK_THROWS_AS(select_top(r, 0, t), ValidationError);
}

TEST_CASE("bundled symptom ranking holds the published out-of-order row") {
    const auto path = std::filesystem::path(NETPRIO_DATA_DIR) / "crc_symptom_similar_diseases.tsv";
    const auto r = load_entity_ranking(path);
    REQUIRE(r.entries.size() == 10);
    CHECK(r.entries[0].first == "Fibrous Dysplasia, Polyostotic");
    CHECK(r.entries[0].second == 0.971);
    CHECK(r.entries[1].first == "Port-Wine Stain");
    CHECK(r.entries[2].first == "HIV Infections");
    CHECK(r.entries[3].first == "Breast Neoplasms, Male");
    CHECK(r.entries[4].first == "Ileitis");
    // In the source table Hyperlipidemias is listed after Microcephaly
    // despite its higher score; loading re-sorts by score.
    CHECK(r.entries[8].first == "Hyperlipidemias");
    CHECK(r.entries[8].second == 0.380);
    CHECK(r.entries[9].first == "Microcephaly");
    CHECK(r.entries[9].second == 0.295);
}

TEST_CASE("bundled phenotype ranking is ordered by published score") {
    const auto path = std::filesystem::path(NETPRIO_DATA_DIR) / "crc_phenotypes.tsv";
    const auto r = load_entity_ranking(path);
    REQUIRE(r.entries.size() == 10);
    CHECK(r.entries[0].first == "Obesity");
    CHECK(r.entries[0].second == 81.59026);
    CHECK(r.entries[9].first == "Fetal Macrosomia");
}

TEST_CASE("bundled comorbidity list has the published six diseases") {
    const auto path = std::filesystem::path(NETPRIO_DATA_DIR) / "crc_comorbid_diseases.tsv";
    TsvReader reader(path);
    std::vector<std::string_view> fields;
    std::vector<std::string> diseases;
    while (reader.next(fields)) {
        REQUIRE(fields.size() == 1);
        diseases.emplace_back(fields[0]);
    }
    REQUIRE(diseases.size() == 6);
    CHECK(diseases[0] == "Adenoma");
    CHECK(std::find(diseases.begin(), diseases.end(), "Lunch-Syndrom") != diseases.end());
}
