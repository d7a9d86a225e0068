#include "netprio/diffusion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <utility>

#include "netprio/errors.hpp"

namespace netprio {

namespace {

void validate(const DiffusionConfig& cfg) {
    if (!(cfg.restart > 0.0 && cfg.restart < 1.0)) {
        throw ValidationError("restart probability must lie in (0, 1)");
    }
    if (!(cfg.tolerance > 0.0)) {
        throw ValidationError("tolerance must be > 0");
    }
    if (cfg.max_iters < 1) {
        throw ValidationError("max_iters must be >= 1");
    }
}

}  // namespace

std::vector<double> seed_start_vector(const Network& net, const SeedSet& seeds) {
    if (seeds.members.empty()) {
        throw ValidationError("seed set is empty");
    }
    std::vector<double> p0(static_cast<std::size_t>(net.node_count()), 0.0);
    const double mass = 1.0 / static_cast<double>(seeds.size());
    for (const std::int32_t s : seeds.members) {
        if (s < 0 || s >= net.node_count()) {
            throw ValidationError("seed index out of range");
        }
        p0[static_cast<std::size_t>(s)] = mass;
    }
    return p0;
}

DiffusionResult propagate(const kernels::SparseMatrix& op, std::span<const double> start,
                          Method tag, const DiffusionConfig& cfg) {
    validate(cfg);
    if (start.size() != static_cast<std::size_t>(op.n)) {
        throw ValidationError("start vector length does not match the operator");
    }

    std::vector<double> cur(start.begin(), start.end());
    std::vector<double> next(cur.size());
    double drift = std::abs(kernels::sum(cur) - 1.0);
    double delta = std::numeric_limits<double>::infinity();

    for (int iter = 1; iter <= cfg.max_iters; ++iter) {
        kernels::spmv(op, cur, next);
        kernels::axpby(1.0 - cfg.restart, next, cfg.restart, start, next);
        delta = kernels::l1_diff(next, cur);
        drift = std::max(drift, std::abs(kernels::sum(next) - 1.0));
        if (delta < cfg.tolerance) {
            // One further update moves `cur` by less than the tolerance,
            // so the step residual of the returned vector is below it.
            return DiffusionResult{ScoreVector{tag, std::move(cur)}, iter, delta, drift};
        }
        std::swap(cur, next);
    }
    throw ConvergenceError(cfg.max_iters, delta);
}

DiffusionResult rwr_score(const Network& net, const SeedSet& seeds, const DiffusionConfig& cfg) {
    const auto op = column_normalized(net);
    const auto p0 = seed_start_vector(net, seeds);
    return propagate(op, p0, Method::rwr, cfg);
}

DiffusionResult np_score(const Network& net, const SeedSet& seeds, const DiffusionConfig& cfg) {
    const auto op = symmetric_normalized(net);
    const auto p0 = seed_start_vector(net, seeds);
    return propagate(op, p0, Method::np, cfg);
}

const char* length_mode_name(LengthMode m) {
    switch (m) {
        case LengthMode::hop:
            return "hop";
        case LengthMode::neglog:
            return "neglog";
        case LengthMode::inverse:
            return "inverse";
    }
    return "unknown";
}

std::optional<LengthMode> length_mode_from_name(std::string_view name) {
    if (name == "hop") return LengthMode::hop;
    if (name == "neglog") return LengthMode::neglog;
    if (name == "inverse") return LengthMode::inverse;
    return std::nullopt;
}

std::vector<double> shortest_distances(const Network& net, const SeedSet& seeds,
                                       LengthMode mode) {
    if (seeds.members.empty()) {
        throw ValidationError("seed set is empty");
    }
    const auto n = static_cast<std::size_t>(net.node_count());
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(n, inf);

    using Item = std::pair<double, std::int32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    for (const std::int32_t s : seeds.members) {
        if (s < 0 || static_cast<std::size_t>(s) >= n) {
            throw ValidationError("seed index out of range");
        }
        dist[static_cast<std::size_t>(s)] = 0.0;
        heap.emplace(0.0, s);
    }

    while (!heap.empty()) {
        const auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[static_cast<std::size_t>(u)]) {
            continue;  // stale entry
        }
        const auto nbrs = net.neighbors(u);
        const auto wts = net.neighbor_weights(u);
        for (std::size_t k = 0; k < nbrs.size(); ++k) {
            double len = 1.0;
            switch (mode) {
                case LengthMode::hop:
                    len = 1.0;
                    break;
                case LengthMode::neglog:
                    len = -std::log(wts[k]);
                    if (len < 0.0) {
                        throw ValidationError(
                            "neglog lengths need weights <= 1; edge weight " +
                            std::to_string(wts[k]) + " found");
                    }
                    break;
                case LengthMode::inverse:
                    len = 1.0 / wts[k];
                    break;
            }
            const double cand = d + len;
            if (cand < dist[static_cast<std::size_t>(nbrs[k])]) {
                dist[static_cast<std::size_t>(nbrs[k])] = cand;
                heap.emplace(cand, nbrs[k]);
            }
        }
    }
    return dist;
}

ScoreVector sp_score(std::span<const double> distances) {
    ScoreVector out{Method::sp, std::vector<double>(distances.size(), 0.0)};
    for (std::size_t i = 0; i < distances.size(); ++i) {
        if (std::isinf(distances[i])) {
            out.values[i] = 0.0;
        } else {
            out.values[i] = 1.0 / (1.0 + distances[i]);
        }
    }
    return out;
}

}  // namespace netprio
