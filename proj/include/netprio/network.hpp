#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "netprio/kernels.hpp"

namespace netprio {

// Undirected weighted edge between node indices. Canonical form keeps
// a <= b; a == b (self-loop) is only representable through
// Network::Options::allow_self_loops.
struct Edge {
    std::int32_t a = 0;
    std::int32_t b = 0;
    double weight = 0.0;
};

// Immutable undirected weighted gene network. Node indices are dense and
// follow first appearance in the source, so loading the same file twice
// yields a bit-identical object.
class Network {
public:
    struct Options {
        bool allow_self_loops = false;
    };

    Network() = default;

    // symbols[i] names node i; edges refer to those indices.
    // Validates: non-empty unique symbols, indices in range, weights > 0,
    // no duplicate edges, no self-loops (unless allowed), no zero-degree
    // nodes.
    static Network build(std::vector<std::string> symbols, std::vector<Edge> edges,
                         const Options& opts);
    static Network build(std::vector<std::string> symbols, std::vector<Edge> edges) {
        return build(std::move(symbols), std::move(edges), Options{});
    }

    std::int32_t node_count() const noexcept { return static_cast<std::int32_t>(symbols_.size()); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::vector<std::string>& symbols() const noexcept { return symbols_; }
    const std::string& symbol(std::int32_t i) const { return symbols_.at(i); }
    std::optional<std::int32_t> index_of(std::string_view symbol) const;

    // Weighted degree: sum of incident edge weights.
    double degree(std::int32_t i) const { return degree_.at(i); }

    // Edges in canonical (a, b) ascending order.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    // Neighbor lists sorted by neighbor index.
    std::span<const std::int32_t> neighbors(std::int32_t u) const;
    std::span<const double> neighbor_weights(std::int32_t u) const;

private:
    std::vector<std::string> symbols_;
    std::unordered_map<std::string, std::int32_t> index_;
    std::vector<Edge> edges_;
    std::vector<double> degree_;
    std::vector<std::int64_t> adj_ptr_;
    std::vector<std::int32_t> adj_idx_;
    std::vector<double> adj_wt_;
};

struct LoadOptions {
    // Edges with weight < cutoff are dropped after duplicate collapsing.
    double cutoff = 0.154;
    // Enforce weights in (0, 1]; disabling keeps only the > 0 requirement.
    bool bounded_weights = true;
};

// Loads an edge list TSV: gene_a<TAB>gene_b<TAB>weight, '#' comments and
// blank lines ignored. Duplicate undirected edges collapse to the maximum
// weight; nodes left without edges after thresholding are removed and the
// survivors re-indexed in first-appearance order.
Network load_network(const std::filesystem::path& path, const LoadOptions& opts = {});

// Non-empty sorted set of node indices.
struct SeedSet {
    std::vector<std::int32_t> members;  // sorted, unique

    std::size_t size() const noexcept { return members.size(); }
    bool contains(std::int32_t i) const;
};

// Builds a SeedSet from indices in any order (sorts, de-duplicates).
SeedSet make_seed_set(std::vector<std::int32_t> indices);

struct SeedLoadResult {
    SeedSet seeds;
    std::vector<std::string> unmapped;  // file order, de-duplicated
};

// Loads one symbol per line ('#' comments ignored), maps onto the network.
// Symbols absent from the network are reported, not fatal; zero mappable
// symbols is a ValidationError.
SeedLoadResult load_seeds(const std::filesystem::path& path, const Network& net);

// W[i][j] = w_ij / degree(j): columns sum to one.
kernels::SparseMatrix column_normalized(const Network& net);

// W'[i][j] = w_ij / sqrt(degree(i) * degree(j)): symmetric.
kernels::SparseMatrix symmetric_normalized(const Network& net);

}  // namespace netprio
