#include "netprio/network.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>
#include <utility>

#include "netprio/errors.hpp"
#include "netprio/tsv.hpp"

namespace netprio {

namespace {

// Packs a canonical undirected pair for duplicate detection.
std::uint64_t pair_key(std::int32_t a, std::int32_t b) {
    const auto lo = static_cast<std::uint32_t>(std::min(a, b));
    const auto hi = static_cast<std::uint32_t>(std::max(a, b));
    return (static_cast<std::uint64_t>(lo) << 32) | hi;
}

}  // namespace

Network Network::build(std::vector<std::string> symbols, std::vector<Edge> edges,
                       const Options& opts) {
    Network net;
    net.symbols_ = std::move(symbols);
    const auto n = static_cast<std::int32_t>(net.symbols_.size());

    net.index_.reserve(net.symbols_.size());
    for (std::int32_t i = 0; i < n; ++i) {
        if (net.symbols_[i].empty()) {
            throw ValidationError("empty gene symbol at node " + std::to_string(i));
        }
        if (!net.index_.emplace(net.symbols_[i], i).second) {
            throw ValidationError("duplicate gene symbol '" + net.symbols_[i] + "'");
        }
    }

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size());
    for (auto& e : edges) {
        if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n) {
            throw ValidationError("edge endpoint out of range");
        }
        if (e.a == e.b && !opts.allow_self_loops) {
            throw ValidationError("self-loop on '" + net.symbols_[e.a] + "'");
        }
        if (!(e.weight > 0.0)) {
            throw ValidationError("non-positive edge weight on '" + net.symbols_[e.a] + "'-'" +
                                  net.symbols_[e.b] + "'");
        }
        if (e.a > e.b) {
            std::swap(e.a, e.b);
        }
        if (!seen.insert(pair_key(e.a, e.b)).second) {
            throw ValidationError("duplicate edge '" + net.symbols_[e.a] + "'-'" +
                                  net.symbols_[e.b] + "'");
        }
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& l, const Edge& r) {
        return std::pair(l.a, l.b) < std::pair(r.a, r.b);
    });
    net.edges_ = std::move(edges);

    net.degree_.assign(n, 0.0);
    std::vector<std::int64_t> counts(n, 0);
    for (const auto& e : net.edges_) {
        net.degree_[e.a] += e.weight;
        ++counts[e.a];
        if (e.b != e.a) {
            net.degree_[e.b] += e.weight;
            ++counts[e.b];
        }
    }
    for (std::int32_t i = 0; i < n; ++i) {
        if (net.degree_[i] <= 0.0) {
            throw ValidationError("isolated node '" + net.symbols_[i] + "'");
        }
    }

    net.adj_ptr_.assign(n + 1, 0);
    std::partial_sum(counts.begin(), counts.end(), net.adj_ptr_.begin() + 1);
    const std::int64_t total = net.adj_ptr_[n];
    net.adj_idx_.resize(total);
    net.adj_wt_.resize(total);
    std::vector<std::int64_t> fill(net.adj_ptr_.begin(), net.adj_ptr_.end() - 1);
    for (const auto& e : net.edges_) {
        net.adj_idx_[fill[e.a]] = e.b;
        net.adj_wt_[fill[e.a]] = e.weight;
        ++fill[e.a];
        if (e.b != e.a) {
            net.adj_idx_[fill[e.b]] = e.a;
            net.adj_wt_[fill[e.b]] = e.weight;
            ++fill[e.b];
        }
    }
    // Neighbor lists sorted by index for deterministic traversal.
    for (std::int32_t i = 0; i < n; ++i) {
        const std::int64_t lo = net.adj_ptr_[i];
        const std::int64_t hi = net.adj_ptr_[i + 1];
        std::vector<std::pair<std::int32_t, double>> row;
        row.reserve(hi - lo);
        for (std::int64_t k = lo; k < hi; ++k) {
            row.emplace_back(net.adj_idx_[k], net.adj_wt_[k]);
        }
        std::sort(row.begin(), row.end());
        for (std::int64_t k = lo; k < hi; ++k) {
            net.adj_idx_[k] = row[k - lo].first;
            net.adj_wt_[k] = row[k - lo].second;
        }
    }
    return net;
}

std::optional<std::int32_t> Network::index_of(std::string_view symbol) const {
    const auto it = index_.find(std::string(symbol));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::span<const std::int32_t> Network::neighbors(std::int32_t u) const {
    return {adj_idx_.data() + adj_ptr_[u],
            static_cast<std::size_t>(adj_ptr_[u + 1] - adj_ptr_[u])};
}

std::span<const double> Network::neighbor_weights(std::int32_t u) const {
    return {adj_wt_.data() + adj_ptr_[u],
            static_cast<std::size_t>(adj_ptr_[u + 1] - adj_ptr_[u])};
}

Network load_network(const std::filesystem::path& path, const LoadOptions& opts) {
    if (opts.cutoff < 0.0) {
        throw ValidationError("cutoff must be >= 0");
    }

    TsvReader reader(path);
    std::vector<std::string_view> fields;

    std::vector<std::string> symbols;          // first-appearance order
    std::unordered_map<std::string, std::int32_t> index;
    std::unordered_map<std::uint64_t, double> best;  // pair key -> max weight

    const auto intern = [&](std::string_view sym) {
        const auto it = index.find(std::string(sym));
        if (it != index.end()) {
            return it->second;
        }
        const auto id = static_cast<std::int32_t>(symbols.size());
        symbols.emplace_back(sym);
        index.emplace(symbols.back(), id);
        return id;
    };

    while (reader.next(fields)) {
        if (fields.size() != 3) {
            throw ParseError(reader.path(), reader.line_number(),
                             "expected 3 tab-separated columns, got " +
                                 std::to_string(fields.size()));
        }
        if (fields[0].empty() || fields[1].empty()) {
            throw ParseError(reader.path(), reader.line_number(), "empty gene symbol");
        }
        const double w = parse_double_field(fields[2], reader.path(), reader.line_number());
        if (!(w > 0.0)) {
            throw ValidationError(reader.path(), reader.line_number(),
                                  "edge weight must be > 0, got " + std::string(fields[2]));
        }
        if (opts.bounded_weights && w > 1.0) {
            throw ValidationError(reader.path(), reader.line_number(),
                                  "edge weight must be <= 1, got " + std::string(fields[2]) +
                                      " (use --no-weight-bounds for unbounded confidence scores)");
        }
        if (fields[0] == fields[1]) {
            throw ValidationError(reader.path(), reader.line_number(),
                                  "self-loop on '" + std::string(fields[0]) + "'");
        }
        const std::int32_t a = intern(fields[0]);
        const std::int32_t b = intern(fields[1]);
        auto [it, inserted] = best.emplace(pair_key(a, b), w);
        if (!inserted && w > it->second) {
            it->second = w;
        }
    }

    if (best.empty()) {
        throw ValidationError("network file '" + path.string() + "' holds no edges");
    }

    // Threshold, then drop nodes left without edges; survivors keep
    // first-appearance order.
    std::vector<char> alive(symbols.size(), 0);
    std::vector<std::pair<std::uint64_t, double>> kept;
    kept.reserve(best.size());
    for (const auto& [key, w] : best) {
        if (w < opts.cutoff) {
            continue;
        }
        kept.emplace_back(key, w);
        alive[static_cast<std::size_t>(key >> 32)] = 1;
        alive[static_cast<std::size_t>(key & 0xffffffffu)] = 1;
    }
    if (kept.empty()) {
        throw ValidationError("cutoff " + format_score(opts.cutoff) + " removes every edge of '" +
                              path.string() + "'");
    }

    std::vector<std::int32_t> remap(symbols.size(), -1);
    std::vector<std::string> final_symbols;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (alive[i]) {
            remap[i] = static_cast<std::int32_t>(final_symbols.size());
            final_symbols.push_back(std::move(symbols[i]));
        }
    }

    std::vector<Edge> edges;
    edges.reserve(kept.size());
    for (const auto& [key, w] : kept) {
        edges.push_back(Edge{remap[static_cast<std::size_t>(key >> 32)],
                             remap[static_cast<std::size_t>(key & 0xffffffffu)], w});
    }
    return Network::build(std::move(final_symbols), std::move(edges));
}

bool SeedSet::contains(std::int32_t i) const {
    return std::binary_search(members.begin(), members.end(), i);
}

SeedSet make_seed_set(std::vector<std::int32_t> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    return SeedSet{std::move(indices)};
}

SeedLoadResult load_seeds(const std::filesystem::path& path, const Network& net) {
    TsvReader reader(path);
    std::vector<std::string_view> fields;
    std::vector<std::int32_t> mapped;
    std::vector<std::string> unmapped;
    std::unordered_set<std::string> unmapped_seen;

    while (reader.next(fields)) {
        if (fields.size() != 1 || fields[0].empty()) {
            throw ParseError(reader.path(), reader.line_number(),
                             "expected one gene symbol per line");
        }
        const std::string symbol(fields[0]);
        if (const auto idx = net.index_of(symbol)) {
            mapped.push_back(*idx);
        } else if (unmapped_seen.insert(symbol).second) {
            unmapped.push_back(symbol);
        }
    }
    if (mapped.empty()) {
        throw ValidationError("no seed symbol maps onto the network (" + reader.path() + ")");
    }
    return SeedLoadResult{make_seed_set(std::move(mapped)), std::move(unmapped)};
}

namespace {

// Shared CSR skeleton: one row per node, entries follow the sorted
// neighbor lists, values filled by the chosen normalization.
template <typename ValueFn>
kernels::SparseMatrix normalized_matrix(const Network& net, ValueFn value) {
    kernels::SparseMatrix m;
    m.n = net.node_count();
    m.row_ptr.assign(m.n + 1, 0);
    for (std::int32_t i = 0; i < m.n; ++i) {
        m.row_ptr[i + 1] = m.row_ptr[i] + static_cast<std::int64_t>(net.neighbors(i).size());
    }
    m.col.resize(m.row_ptr[m.n]);
    m.val.resize(m.row_ptr[m.n]);
    for (std::int32_t i = 0; i < m.n; ++i) {
        const auto nbrs = net.neighbors(i);
        const auto wts = net.neighbor_weights(i);
        std::int64_t k = m.row_ptr[i];
        for (std::size_t j = 0; j < nbrs.size(); ++j, ++k) {
            m.col[k] = nbrs[j];
            m.val[k] = value(i, nbrs[j], wts[j]);
        }
    }
    return m;
}

}  // namespace

kernels::SparseMatrix column_normalized(const Network& net) {
    return normalized_matrix(net, [&](std::int32_t, std::int32_t j, double w) {
        return w / net.degree(j);
    });
}

kernels::SparseMatrix symmetric_normalized(const Network& net) {
    return normalized_matrix(net, [&](std::int32_t i, std::int32_t j, double w) {
        return w / std::sqrt(net.degree(i) * net.degree(j));
    });
}

}  // namespace netprio
