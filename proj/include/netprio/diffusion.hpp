#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "netprio/network.hpp"
#include "netprio/score.hpp"

namespace netprio {

struct DiffusionConfig {
    double restart = 0.15;    // restart probability, in (0, 1)
    double tolerance = 1e-6;  // L1 stopping threshold, > 0
    int max_iters = 10000;
};

struct DiffusionResult {
    ScoreVector scores;
    int iterations = 0;
    // L1 distance between the returned vector and one further update;
    // < tolerance by construction.
    double residual = 0.0;
    // Largest |sum(P) - 1| seen over all iterates. Meaningful for the
    // column-stochastic operator, where probability mass is conserved.
    double max_mass_drift = 0.0;
};

// Start vector: 1/|seeds| on seed nodes, 0 elsewhere.
std::vector<double> seed_start_vector(const Network& net, const SeedSet& seeds);

// Iterates P <- (1 - r) * M * P + r * P0 until the L1 difference between
// consecutive iterates drops below tolerance, then returns the iterate
// whose next update moves it by less than tolerance. Throws
// ConvergenceError when max_iters updates are exhausted.
DiffusionResult propagate(const kernels::SparseMatrix& op, std::span<const double> start,
                          Method tag, const DiffusionConfig& cfg);

// Random walk with restart on the column-normalized network.
DiffusionResult rwr_score(const Network& net, const SeedSet& seeds,
                          const DiffusionConfig& cfg = {});

// Propagation on the symmetrically normalized network.
DiffusionResult np_score(const Network& net, const SeedSet& seeds,
                         const DiffusionConfig& cfg = {});

// Edge length conventions for shortest paths.
enum class LengthMode {
    hop,      // every edge has length 1
    neglog,   // -ln(weight); requires weights <= 1
    inverse,  // 1 / weight
};

const char* length_mode_name(LengthMode m);
std::optional<LengthMode> length_mode_from_name(std::string_view name);

// Multi-source Dijkstra distance from the seed set to every node.
// Unreachable nodes hold +infinity.
std::vector<double> shortest_distances(const Network& net, const SeedSet& seeds, LengthMode mode);

// score = 1 / (1 + d); unreachable nodes score 0.
ScoreVector sp_score(std::span<const double> distances);

}  // namespace netprio
