#include <iostream>
#include <string>
#include <vector>

#include "common.hpp"
#include "netprio/errors.hpp"
#include "netprio/evaluation.hpp"
#include "netprio/tsv.hpp"

namespace netprio::cli {

namespace {

struct ExpressionRow {
    std::string gene;
    std::vector<double> tumor;
    std::vector<double> normal;
};

// Expression matrix: genes x samples; the first data row labels each
// sample column tumor or normal.
std::vector<ExpressionRow> load_expression(const std::filesystem::path& path) {
    TsvReader reader(path);
    std::vector<std::string_view> fields;
    if (!reader.next(fields)) {
        throw ValidationError(reader.path(), reader.line_number(),
                              "expression file has no label row");
    }
    if (fields.size() < 3) {
        throw ValidationError(reader.path(), reader.line_number(),
                              "label row needs at least two sample columns");
    }
    std::vector<bool> is_tumor;
    for (std::size_t i = 1; i < fields.size(); ++i) {
        if (fields[i] == "tumor") {
            is_tumor.push_back(true);
        } else if (fields[i] == "normal") {
            is_tumor.push_back(false);
        } else {
            throw ValidationError(reader.path(), reader.line_number(),
                                  "sample label must be tumor or normal, got '" +
                                      std::string(fields[i]) + "'");
        }
    }
    std::size_t tumor_count = 0;
    for (const bool t : is_tumor) {
        tumor_count += t ? 1 : 0;
    }
    if (tumor_count == 0 || tumor_count == is_tumor.size()) {
        throw ValidationError(reader.path(), reader.line_number(),
                              "need at least one tumor and one normal sample");
    }
    std::vector<ExpressionRow> rows;
    while (reader.next(fields)) {
        if (fields.size() != is_tumor.size() + 1 || fields[0].empty()) {
            throw ParseError(reader.path(), reader.line_number(),
                             "expected gene plus " + std::to_string(is_tumor.size()) +
                                 " sample values");
        }
        ExpressionRow row;
        row.gene = std::string(fields[0]);
        for (std::size_t i = 0; i < is_tumor.size(); ++i) {
            const double v =
                parse_double_field(fields[i + 1], reader.path(), reader.line_number());
            (is_tumor[i] ? row.tumor : row.normal).push_back(v);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw ValidationError("expression file '" + path.string() + "' has no gene rows");
    }
    return rows;
}

void write_proximity(std::ostream& out, const ProximitySummary& prox) {
    out << "# distance\tcount\tfraction\n";
    const double total = static_cast<double>(prox.total);
    for (const auto& [d, count] : prox.histogram) {
        out << d << '\t' << count << '\t'
            << format_score(static_cast<double>(count) / total) << '\n';
    }
    if (prox.unreachable > 0) {
        out << "unreachable\t" << prox.unreachable << '\t'
            << format_score(static_cast<double>(prox.unreachable) / total) << '\n';
    }
    out << "# total\t" << prox.total << '\n';
    out << "# missing\t" << prox.missing << '\n';
    out << "# frac_within_1\t" << format_score(prox.frac_within_1) << '\n';
    out << "# frac_within_2\t" << format_score(prox.frac_within_2) << '\n';
}

}  // namespace

void run_analyze(const AnalyzeCmd& cmd) {
    if (cmd.top < 0) {
        throw ValidationError("--top must be >= 0");
    }
    if (cmd.cutoff < 0.0) {
        throw ValidationError("--cutoff must be >= 0");
    }
    const LoadOptions load{cmd.cutoff, !cmd.no_weight_bounds};
    const Network net = load_network(cmd.network, load);
    const SeedLoadResult seed_result = load_seeds(cmd.seeds, net);
    for (const auto& symbol : seed_result.unmapped) {
        std::cerr << "warning: seed gene '" << symbol << "' is not in the network\n";
    }

    // Candidates: the best-ranked non-seed genes.
    const std::vector<std::string> ranked = read_ranking_genes(cmd.ranking);
    std::vector<std::string> candidates;
    for (const auto& gene : ranked) {
        const auto idx = net.index_of(gene);
        if (idx && seed_result.seeds.contains(*idx)) {
            continue;
        }
        candidates.push_back(gene);
        if (cmd.top > 0 && candidates.size() == static_cast<std::size_t>(cmd.top)) {
            break;
        }
    }
    if (candidates.empty()) {
        throw ValidationError("ranking file holds no candidate genes");
    }

    const ProximitySummary prox = proximity_summary(net, candidates, seed_result.seeds);
    if (prox.total == 0) {
        std::cerr << "warning: no candidate gene maps into the network\n";
    }
    const std::vector<MediatorCount> mediators =
        mediator_counts(net, candidates, seed_result.seeds);

    {
        auto out = open_output(cmd.out + ".proximity.tsv");
        write_proximity(out, prox);
    }
    write_proximity(std::cout, prox);
    {
        auto out = open_output(cmd.out + ".mediators.tsv");
        out << "# gene\tcount\n";
        for (const auto& m : mediators) {
            out << m.symbol << '\t' << m.count << '\n';
        }
    }

    if (!cmd.expression.empty()) {
        const auto rows = load_expression(cmd.expression);
        auto out = open_output(cmd.out + ".expression.tsv");
        out << "# gene\tu_a\tu_b\tp_value\texact\tp-value<0.05\n";
        for (const auto& row : rows) {
            const MannWhitneyResult r = mann_whitney(row.tumor, row.normal);
            out << row.gene << '\t' << format_score(r.u_a) << '\t' << format_score(r.u_b)
                << '\t' << format_score(r.p_value) << '\t' << (r.exact ? 1 : 0) << '\t'
                << (r.p_value < 0.05 ? 1 : 0) << '\n';
        }
    }

    Manifest m("analyze");
    m.set("cutoff", cmd.cutoff);
    m.set("no-weight-bounds", cmd.no_weight_bounds);
    m.set("top", cmd.top);
    m.set("out", cmd.out);
    m.add_input("network", cmd.network);
    m.add_input("seeds", cmd.seeds);
    m.add_input("ranking", cmd.ranking);
    if (!cmd.expression.empty()) {
        m.add_input("expression", cmd.expression);
    }
    m.write(cmd.out + ".manifest.txt");
}

}  // namespace netprio::cli
