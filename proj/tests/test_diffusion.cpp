#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "netprio/diffusion.hpp"
#include "netprio/errors.hpp"
#include "netprio/kernels.hpp"
#include "netprio/network.hpp"
#include "netprio/rng.hpp"
#include "support/oracles.hpp"

using namespace netprio;
using namespace netprio::testing;

TEST_CASE("two-node RWR has the known stationary split") {
    const auto net = Network::build({"a", "b"}, {{0, 1, 1.0}});
    const auto seeds = make_seed_set({0});
    const auto r = rwr_score(net, seeds);
    CHECK(r.scores.tag == Method::rwr);
    CHECK(r.scores.values[0] == doctest::Approx(0.54054).epsilon(1e-5));
    CHECK(r.scores.values[1] == doctest::Approx(0.45946).epsilon(1e-5));
    CHECK(r.residual < 1e-6);
    CHECK(r.max_mass_drift <= 1e-9);
}

TEST_CASE("single self-loop node converges to the start vector") {
    const auto net = Network::build({"a"}, {{0, 0, 1.0}}, {true});
    const auto res = rwr_score(net, make_seed_set({0}));
    CHECK(res.scores.values[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("seed start vector spreads mass uniformly over the seeds") {
    const auto net = Network::build({"a", "b", "c"}, {{0, 1, 1.0}, {1, 2, 1.0}});
    const auto p0 = seed_start_vector(net, make_seed_set({0, 2}));
    CHECK(p0 == std::vector<double>{0.5, 0.0, 0.5});
}

TEST_CASE("diffusion matches the dense fixed-point oracle") {
    Rng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const auto n = static_cast<std::int32_t>(2 + rng.below(49));
        const auto g = random_graph(rng, n, 0.1);
        const auto net = to_network(g);
        const auto k = static_cast<std::int32_t>(1 + rng.below(static_cast<std::uint64_t>(n)));
        const auto seeds = make_seed_set(random_subset(rng, n, k));
        const auto p0 = seed_start_vector(net, seeds);

        const auto col = rwr_score(net, seeds);
        const auto want_col = dense_fixed_point(g.edges, n, Normalization::column, p0, 0.15);
        for (std::int32_t i = 0; i < n; ++i) {
            CHECK(std::abs(col.scores.values[i] - want_col[i]) < 1e-5);
        }

        const auto sym = np_score(net, seeds);
        const auto want_sym = dense_fixed_point(g.edges, n, Normalization::symmetric, p0, 0.15);
        for (std::int32_t i = 0; i < n; ++i) {
            CHECK(std::abs(sym.scores.values[i] - want_sym[i]) < 1e-5);
        }
    }
}

TEST_CASE("probability mass is conserved throughout the walk") {
    Rng rng(32);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = random_graph(rng, static_cast<std::int32_t>(10 + rng.below(60)), 0.08);
        const auto net = to_network(g);
        const auto seeds = make_seed_set(random_subset(rng, net.node_count(), 3));
        const auto r = rwr_score(net, seeds);
        CHECK(r.max_mass_drift <= 1e-9);
        CHECK(kernels::sum(r.scores.values) == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("returned vector moves less than the tolerance under one more update") {
    Rng rng(33);
    const auto g = random_graph(rng, 30, 0.1);
    const auto net = to_network(g);
    const auto seeds = make_seed_set(random_subset(rng, 30, 4));
    const DiffusionConfig cfg;
    const auto res = rwr_score(net, seeds, cfg);

    const auto op = column_normalized(net);
    const auto p0 = seed_start_vector(net, seeds);
    std::vector<double> next(static_cast<std::size_t>(net.node_count()));
    kernels::spmv(op, res.scores.values, next);
    kernels::axpby(1.0 - cfg.restart, next, cfg.restart, p0, next);
    CHECK(kernels::l1_diff(res.scores.values, next) < cfg.tolerance);
    CHECK(kernels::l1_diff(res.scores.values, next) == doctest::Approx(res.residual));
}

TEST_CASE("seed order does not change the result") {
    Rng rng(34);
    const auto g = random_graph(rng, 20, 0.15);
    const auto net = to_network(g);
    const auto a = rwr_score(net, make_seed_set({7, 3, 11}));
    const auto b = rwr_score(net, make_seed_set({11, 7, 3}));
    CHECK(a.scores.values == b.scores.values);
}

TEST_CASE("restart approaching one pins the walk to the seeds") {
    Rng rng(35);
    const auto g = random_graph(rng, 10, 0.3);
    const auto net = to_network(g);
    const auto seeds = make_seed_set({0, 5});
    const auto p0 = seed_start_vector(net, seeds);
    DiffusionConfig cfg;
    cfg.restart = 0.999;
    const auto res = rwr_score(net, seeds, cfg);
    for (std::size_t i = 0; i < p0.size(); ++i) {
        CHECK(std::abs(res.scores.values[i] - p0[i]) < 0.01);
    }
}

TEST_CASE("symmetric propagation scores symmetric leaves equally") {
    const auto net = Network::build({"c", "l1", "l2"}, {{0, 1, 0.8}, {0, 2, 0.8}});
    const auto res = np_score(net, make_seed_set({0, 1, 2}));
    CHECK(res.scores.tag == Method::np);
    CHECK(res.scores.values[1] == res.scores.values[2]);
}

TEST_CASE("exhausting max_iters raises ConvergenceError") {
    const auto net = Network::build({"a", "b", "c", "d"},
                                    {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}});
    DiffusionConfig cfg;
    cfg.max_iters = 1;
    try {
        rwr_score(net, make_seed_set({0}), cfg);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.iterations() == 1);
        CHECK(e.residual() >= cfg.tolerance);
    }
}

TEST_CASE("diffusion config is validated") {
    const auto net = Network::build({"a", "b"}, {{0, 1, 1.0}});
    const auto seeds = make_seed_set({0});
    DiffusionConfig cfg;
    cfg.restart = 0.0;
    CHECK_THROWS_AS(rwr_score(net, seeds, cfg), ValidationError);
    cfg.restart = 1.0;
    CHECK_THROWS_AS(rwr_score(net, seeds, cfg), ValidationError);
    cfg.restart = 0.15;
    cfg.tolerance = 0.0;
    CHECK_THROWS_AS(rwr_score(net, seeds, cfg), ValidationError);
    cfg.tolerance = 1e-6;
    cfg.max_iters = 0;
    CHECK_THROWS_AS(rwr_score(net, seeds, cfg), ValidationError);
}

TEST_CASE("hop distances on a chain count edges") {
    const auto net = Network::build({"a", "b", "c", "d"},
                                    {{0, 1, 0.9}, {1, 2, 0.9}, {2, 3, 0.9}});
    const auto d = shortest_distances(net, make_seed_set({0}), LengthMode::hop);
    CHECK(d == std::vector<double>{0.0, 1.0, 2.0, 3.0});
}

TEST_CASE("neglog lengths multiply edge reliabilities") {
    // Triangle: a-c direct weight 0.5, a-b-c both 0.9. The two-hop route
    // costs -2 ln 0.9 < -ln 0.5, so Dijkstra must route through b.
    const auto net = Network::build({"a", "b", "c"},
                                    {{0, 1, 0.9}, {1, 2, 0.9}, {0, 2, 0.5}});
    const auto d = shortest_distances(net, make_seed_set({0}), LengthMode::neglog);
    CHECK(d[2] == doctest::Approx(-2.0 * std::log(0.9)).epsilon(1e-12));
    CHECK(d[1] == doctest::Approx(-std::log(0.9)).epsilon(1e-12));
}

TEST_CASE("inverse lengths are reciprocals of the weights") {
    const auto net = Network::build({"a", "b", "c"}, {{0, 1, 0.5}, {1, 2, 0.25}});
    const auto d = shortest_distances(net, make_seed_set({0}), LengthMode::inverse);
    CHECK(d[1] == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(d[2] == doctest::Approx(6.0).epsilon(1e-15));
}

TEST_CASE("neglog rejects weights above one") {
    const auto net = Network::build({"a", "b"}, {{0, 1, 1.5}});
    CHECK_THROWS_AS(shortest_distances(net, make_seed_set({0}), LengthMode::neglog),
                    ValidationError);
    CHECK_NOTHROW(shortest_distances(net, make_seed_set({0}), LengthMode::inverse));
}

TEST_CASE("unreachable nodes sit at infinity and every seed at zero") {
    const auto net = Network::build({"a", "b", "c", "d"}, {{0, 1, 0.5}, {2, 3, 0.5}});
    const auto d = shortest_distances(net, make_seed_set({0}), LengthMode::hop);
    CHECK(d[0] == 0.0);
    CHECK(d[1] == 1.0);
    CHECK(std::isinf(d[2]));
    CHECK(std::isinf(d[3]));

    const auto all = shortest_distances(net, make_seed_set({0, 1, 2, 3}), LengthMode::hop);
    for (double v : all) CHECK(v == 0.0);
}

TEST_CASE("dijkstra agrees with exhaustive path enumeration") {
    Rng rng(36);
    for (int trial = 0; trial < 40; ++trial) {
        const auto n = static_cast<std::int32_t>(4 + rng.below(5));
        const bool connected = trial % 2 == 0;
        const auto g = random_graph(rng, n, 0.3, connected);
        const auto net = to_network(g);
        const auto k = static_cast<std::int32_t>(1 + rng.below(2));
        const auto seeds = make_seed_set(random_subset(rng, n, k));
        for (auto mode : {LengthMode::hop, LengthMode::neglog, LengthMode::inverse}) {
            const auto got = shortest_distances(net, seeds, mode);
            const auto want =
                brute_force_distances(g.edges, n, seeds.members, edge_lengths(g.edges, mode));
            for (std::int32_t i = 0; i < n; ++i) {
                if (std::isinf(want[i])) {
                    CHECK(std::isinf(got[i]));
                } else if (mode == LengthMode::hop) {
                    CHECK(got[i] == want[i]);
                } else {
                    CHECK(std::abs(got[i] - want[i]) <= 1e-12);
                }
            }
        }
    }
}

TEST_CASE("sp_score transforms distances and zeroes the unreachable") {
    const std::vector<double> d = {0.0, 1.0, 2.0, 3.0,
                                   std::numeric_limits<double>::infinity()};
    const auto s = sp_score(d);
    CHECK(s.tag == Method::sp);
    CHECK(s.values[0] == 1.0);
    CHECK(s.values[1] == 0.5);
    CHECK(s.values[2] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(s.values[3] == 0.25);
    CHECK(s.values[4] == 0.0);
    for (std::size_t i = 1; i < s.values.size(); ++i) {
        CHECK(s.values[i] < s.values[i - 1]);  // larger distance, smaller score
    }
}
