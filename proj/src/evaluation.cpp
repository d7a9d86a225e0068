#include "netprio/evaluation.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <deque>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "netprio/errors.hpp"
#include "netprio/tsv.hpp"

namespace netprio {

bool PositionTable::insert(PositionRow row) {
    const auto [it, inserted] = index_.emplace(row.symbol, rows_.size());
    (void)it;
    if (!inserted) {
        ++duplicates_;
        return false;
    }
    rows_.push_back(std::move(row));
    return true;
}

const PositionRow* PositionTable::find(std::string_view symbol) const {
    const auto it = index_.find(std::string(symbol));
    if (it == index_.end()) {
        return nullptr;
    }
    return &rows_[it->second];
}

PositionTable load_positions(const std::filesystem::path& path) {
    TsvReader reader(path);
    std::vector<std::string_view> fields;
    PositionTable table;
    while (reader.next(fields)) {
        if (fields.size() != 3 || fields[0].empty() || fields[1].empty()) {
            throw ParseError(reader.path(), reader.line_number(),
                             "expected gene<TAB>chromosome<TAB>position_bp");
        }
        const std::int64_t pos =
            parse_int_field(fields[2], reader.path(), reader.line_number());
        if (pos < 0) {
            throw ValidationError(reader.path(), reader.line_number(),
                                  "position must be >= 0");
        }
        table.insert(PositionRow{std::string(fields[0]), std::string(fields[1]), pos});
    }
    return table;
}

namespace {

struct Candidate {
    std::int64_t position = 0;
    const std::string* symbol = nullptr;
};

// Nearest `count` candidates by (|pos - target|, pos, symbol) ascending.
// Returns indices into `candidates`.
std::vector<std::size_t> nearest_candidates(const std::vector<Candidate>& candidates,
                                            std::int64_t target_pos, std::size_t count) {
    std::vector<std::size_t> order(candidates.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
        const std::int64_t dl = std::abs(candidates[l].position - target_pos);
        const std::int64_t dr = std::abs(candidates[r].position - target_pos);
        if (dl != dr) return dl < dr;
        if (candidates[l].position != candidates[r].position) {
            return candidates[l].position < candidates[r].position;
        }
        return *candidates[l].symbol < *candidates[r].symbol;
    });
    order.resize(count);
    return order;
}

}  // namespace

IntervalOutcome build_interval(const std::string& target, const PositionTable& positions,
                               std::size_t interval_size) {
    if (interval_size < 2) {
        throw ValidationError("interval size must be >= 2");
    }
    const PositionRow* tp = positions.find(target);
    if (tp == nullptr) {
        return IntervalOutcome{std::nullopt, "no position entry for '" + target + "'"};
    }
    std::vector<Candidate> candidates;
    for (const auto& row : positions.rows()) {
        if (row.chromosome == tp->chromosome && row.symbol != target) {
            candidates.push_back(Candidate{row.position, &row.symbol});
        }
    }
    if (candidates.size() < interval_size - 1) {
        return IntervalOutcome{
            std::nullopt, "chromosome " + tp->chromosome + " holds " +
                              std::to_string(candidates.size() + 1) + " genes, interval needs " +
                              std::to_string(interval_size)};
    }
    LinkageInterval interval;
    interval.target = target;
    for (const std::size_t i :
         nearest_candidates(candidates, tp->position, interval_size - 1)) {
        interval.decoys.push_back(*candidates[i].symbol);
    }
    return IntervalOutcome{std::move(interval), ""};
}

std::optional<MethodSpec> method_spec(std::string_view name) {
    if (name == "hybrid") {
        return MethodSpec{"hybrid", all_components()};
    }
    if (name == "netcombo") {
        return MethodSpec{"netcombo", {Method::rwr, Method::np, Method::sp}};
    }
    if (const auto m = method_from_name(name); m && *m != Method::fused) {
        return MethodSpec{std::string(name), {*m}};
    }
    return std::nullopt;
}

std::pair<std::vector<RocPoint>, double> roc_and_auc(std::span<const std::int32_t> ranks,
                                                     std::size_t interval_size) {
    if (ranks.empty()) {
        throw ValidationError("ROC needs at least one rank");
    }
    const std::size_t L = interval_size;
    std::vector<std::size_t> hits(L + 1, 0);
    for (const std::int32_t r : ranks) {
        if (r < 1 || static_cast<std::size_t>(r) > L) {
            throw ValidationError("rank " + std::to_string(r) + " outside interval of size " +
                                  std::to_string(L));
        }
        ++hits[static_cast<std::size_t>(r)];
    }
    const double q = static_cast<double>(ranks.size());
    std::vector<RocPoint> roc(L + 1);
    std::size_t cum = 0;
    for (std::size_t k = 0; k <= L; ++k) {
        cum += hits[k];
        roc[k] = RocPoint{static_cast<double>(k) / static_cast<double>(L),
                          static_cast<double>(cum) / q};
    }
    double auc = 0.0;
    for (std::size_t k = 0; k < L; ++k) {
        auc += (roc[k].tpr + roc[k + 1].tpr) / (2.0 * static_cast<double>(L));
    }
    return {std::move(roc), auc};
}

double mean_reciprocal_rank(std::span<const std::int32_t> ranks) {
    if (ranks.empty()) {
        throw ValidationError("MRR needs at least one rank");
    }
    double acc = 0.0;
    for (const std::int32_t r : ranks) {
        if (r < 1) {
            throw ValidationError("ranks must be >= 1");
        }
        acc += 1.0 / static_cast<double>(r);
    }
    return acc / static_cast<double>(ranks.size());
}

RankSummary rank_summaries(std::span<const std::int32_t> ranks, std::size_t interval_size) {
    if (ranks.empty()) {
        throw ValidationError("rank summary needs at least one rank");
    }
    // ceil(0.01 L) and ceil(0.05 L) in integer arithmetic.
    const std::size_t top1_cut = (interval_size + 99) / 100;
    const std::size_t top5_cut = (interval_size + 19) / 20;
    RankSummary s;
    std::size_t in1 = 0;
    std::size_t in5 = 0;
    for (const std::int32_t r : ranks) {
        s.average_rank += static_cast<double>(r);
        if (static_cast<std::size_t>(r) <= top1_cut) ++in1;
        if (static_cast<std::size_t>(r) <= top5_cut) ++in5;
    }
    const double q = static_cast<double>(ranks.size());
    s.average_rank /= q;
    s.top1_frac = static_cast<double>(in1) / q;
    s.top5_frac = static_cast<double>(in5) / q;
    return s;
}

EvalReport make_report(std::vector<FoldRank> folds, std::size_t interval_size) {
    if (folds.empty()) {
        throw ValidationError("no evaluable folds");
    }
    std::vector<std::int32_t> ranks;
    ranks.reserve(folds.size());
    for (const auto& f : folds) {
        ranks.push_back(f.rank);
    }
    EvalReport report;
    report.interval_size = interval_size;
    report.folds = std::move(folds);
    auto [roc, auc] = roc_and_auc(ranks, interval_size);
    report.roc = std::move(roc);
    report.auc = auc;
    report.mrr = mean_reciprocal_rank(ranks);
    const RankSummary s = rank_summaries(ranks, interval_size);
    report.average_rank = s.average_rank;
    report.top1_frac = s.top1_frac;
    report.top5_frac = s.top5_frac;
    return report;
}

namespace {

// Hop distances from a source set; -1 marks unreachable nodes.
std::vector<std::int32_t> bfs_hops(const Network& net, std::span<const std::int32_t> sources) {
    std::vector<std::int32_t> dist(static_cast<std::size_t>(net.node_count()), -1);
    std::deque<std::int32_t> queue;
    for (const std::int32_t s : sources) {
        if (dist[static_cast<std::size_t>(s)] == -1) {
            dist[static_cast<std::size_t>(s)] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        const std::int32_t u = queue.front();
        queue.pop_front();
        for (const std::int32_t v : net.neighbors(u)) {
            if (dist[static_cast<std::size_t>(v)] == -1) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

}  // namespace

ProximitySummary proximity_summary(const Network& net,
                                   std::span<const std::string> candidates,
                                   const SeedSet& seeds) {
    if (seeds.members.empty()) {
        throw ValidationError("seed set is empty");
    }
    const auto dist = bfs_hops(net, seeds.members);
    ProximitySummary out;
    std::unordered_map<std::int32_t, std::size_t> hist;
    std::size_t within1 = 0;
    std::size_t within2 = 0;
    for (const auto& symbol : candidates) {
        const auto idx = net.index_of(symbol);
        if (!idx) {
            ++out.missing;
            continue;
        }
        ++out.total;
        const std::int32_t d = dist[static_cast<std::size_t>(*idx)];
        if (d < 0) {
            ++out.unreachable;
            continue;
        }
        ++hist[d];
        if (d <= 1) ++within1;
        if (d <= 2) ++within2;
    }
    out.histogram.assign(hist.begin(), hist.end());
    std::sort(out.histogram.begin(), out.histogram.end());
    if (out.total > 0) {
        out.frac_within_1 = static_cast<double>(within1) / static_cast<double>(out.total);
        out.frac_within_2 = static_cast<double>(within2) / static_cast<double>(out.total);
    }
    return out;
}

std::vector<MediatorCount> mediator_counts(const Network& net,
                                           std::span<const std::string> candidates,
                                           const SeedSet& seeds) {
    if (seeds.members.empty()) {
        throw ValidationError("seed set is empty");
    }
    std::vector<std::int64_t> counts(static_cast<std::size_t>(net.node_count()), 0);
    for (const auto& symbol : candidates) {
        const auto cand = net.index_of(symbol);
        if (!cand) {
            continue;
        }
        const std::int32_t src[] = {*cand};
        const auto dist = bfs_hops(net, src);
        for (const std::int32_t s : seeds.members) {
            if (dist[static_cast<std::size_t>(s)] <= 1) {
                continue;  // unreachable, the candidate itself, or adjacent
            }
            // Walk one canonical shortest path back towards the candidate,
            // taking the lexicographically smallest predecessor each step.
            std::int32_t cur = s;
            while (dist[static_cast<std::size_t>(cur)] > 1) {
                std::int32_t best = -1;
                for (const std::int32_t v : net.neighbors(cur)) {
                    if (dist[static_cast<std::size_t>(v)] !=
                        dist[static_cast<std::size_t>(cur)] - 1) {
                        continue;
                    }
                    if (best < 0 || net.symbol(v) < net.symbol(best)) {
                        best = v;
                    }
                }
                cur = best;
                ++counts[static_cast<std::size_t>(cur)];
            }
        }
    }
    std::vector<MediatorCount> out;
    for (std::int32_t i = 0; i < net.node_count(); ++i) {
        if (counts[static_cast<std::size_t>(i)] > 0) {
            out.push_back(MediatorCount{net.symbol(i), counts[static_cast<std::size_t>(i)]});
        }
    }
    std::sort(out.begin(), out.end(), [](const MediatorCount& l, const MediatorCount& r) {
        if (l.count != r.count) return l.count > r.count;
        return l.symbol < r.symbol;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Mann-Whitney U
// ---------------------------------------------------------------------------

namespace {

void validate_samples(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) {
        throw ValidationError("Mann-Whitney needs two non-empty samples");
    }
}

// 2 * U_a computed pairwise: wins count 2, ties count 1. Exact integer.
std::int64_t u2_pairwise(std::span<const double> a, std::span<const double> b) {
    std::int64_t u2 = 0;
    for (const double x : a) {
        for (const double y : b) {
            if (x > y) {
                u2 += 2;
            } else if (x == y) {
                u2 += 1;
            }
        }
    }
    return u2;
}

}  // namespace

double mann_whitney_u(std::span<const double> a, std::span<const double> b) {
    validate_samples(a, b);
    // Midrank formulation; ties contribute exact halves.
    struct Tagged {
        double value;
        bool in_a;
    };
    std::vector<Tagged> pool;
    pool.reserve(a.size() + b.size());
    for (const double v : a) pool.push_back({v, true});
    for (const double v : b) pool.push_back({v, false});
    std::sort(pool.begin(), pool.end(),
              [](const Tagged& l, const Tagged& r) { return l.value < r.value; });

    double rank_sum_a = 0.0;
    std::size_t i = 0;
    while (i < pool.size()) {
        std::size_t j = i;
        while (j + 1 < pool.size() && pool[j + 1].value == pool[i].value) {
            ++j;
        }
        // Ranks i+1 .. j+1 share the midrank.
        const double midrank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k) {
            if (pool[k].in_a) {
                rank_sum_a += midrank;
            }
        }
        i = j + 1;
    }
    const double na = static_cast<double>(a.size());
    return rank_sum_a - na * (na + 1.0) / 2.0;
}

double mann_whitney_exact_p(std::span<const double> a, std::span<const double> b) {
    validate_samples(a, b);
    const std::size_t na = a.size();
    const std::size_t nb = b.size();
    const std::size_t n = na + nb;

    std::vector<double> pool(a.begin(), a.end());
    pool.insert(pool.end(), b.begin(), b.end());

    // g2[i] = 2 * wins + ties of pool[i] against the rest of the pool;
    // a subset A of size na has 2*U_A = sum(g2[A]) - na*(na-1).
    std::vector<std::int64_t> g2(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (pool[i] > pool[j]) {
                g2[i] += 2;
            } else if (pool[i] == pool[j]) {
                g2[i] += 1;
            }
        }
    }

    const std::int64_t mean2 = static_cast<std::int64_t>(na) * static_cast<std::int64_t>(nb);
    const std::int64_t base = static_cast<std::int64_t>(na) * (static_cast<std::int64_t>(na) - 1);
    const std::int64_t dev_obs = std::abs(u2_pairwise(a, b) - mean2);

    std::uint64_t total = 0;
    std::uint64_t extreme = 0;
    // Depth-first enumeration of all na-subsets with a running g2 sum.
    const auto recurse = [&](auto&& self, std::size_t pos, std::size_t remaining,
                             std::int64_t sum) -> void {
        if (remaining == 0) {
            ++total;
            if (std::abs(sum - base - mean2) >= dev_obs) {
                ++extreme;
            }
            return;
        }
        if (n - pos < remaining) {
            return;
        }
        self(self, pos + 1, remaining - 1, sum + g2[pos]);
        self(self, pos + 1, remaining, sum);
    };
    recurse(recurse, 0, na, 0);
    return static_cast<double>(extreme) / static_cast<double>(total);
}

double mann_whitney_normal_p(std::span<const double> a, std::span<const double> b) {
    validate_samples(a, b);
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    const double n = na + nb;
    const double u = mann_whitney_u(a, b);
    const double mu = na * nb / 2.0;

    std::vector<double> pool(a.begin(), a.end());
    pool.insert(pool.end(), b.begin(), b.end());
    std::sort(pool.begin(), pool.end());
    double tie_sum = 0.0;
    std::size_t i = 0;
    while (i < pool.size()) {
        std::size_t j = i;
        while (j + 1 < pool.size() && pool[j + 1] == pool[i]) {
            ++j;
        }
        const double t = static_cast<double>(j - i + 1);
        tie_sum += t * t * t - t;
        i = j + 1;
    }

    double sigma2 = na * nb / 12.0 * ((n + 1.0) - tie_sum / (n * (n - 1.0)));
    if (!(sigma2 > 0.0)) {
        return 1.0;
    }
    double z = (std::abs(u - mu) - 0.5) / std::sqrt(sigma2);
    if (z < 0.0) {
        z = 0.0;
    }
    const double p = std::erfc(z / std::sqrt(2.0));
    return std::min(p, 1.0);
}

MannWhitneyResult mann_whitney(std::span<const double> a, std::span<const double> b) {
    validate_samples(a, b);
    MannWhitneyResult r;
    r.u_a = mann_whitney_u(a, b);
    r.u_b = static_cast<double>(a.size()) * static_cast<double>(b.size()) - r.u_a;
    r.exact = a.size() * b.size() <= 20;
    r.p_value = r.exact ? mann_whitney_exact_p(a, b) : mann_whitney_normal_p(a, b);
    return r;
}

// ---------------------------------------------------------------------------
// Leave-one-out cross-validation
// ---------------------------------------------------------------------------

namespace {

struct ChromCandidate {
    std::int64_t position = 0;
    const std::string* symbol = nullptr;
    std::int32_t node = -1;
};

struct FoldOutcome {
    bool skipped = false;
    std::string reason;
    std::vector<std::int32_t> rank_per_method;
};

}  // namespace

LoocvResult loocv(const Network& net, const SeedSet& seeds,
                  std::span<const AssociationTable> tables, const PositionTable& positions,
                  const EvalConfig& cfg) {
    if (seeds.size() < 2) {
        throw ValidationError("leave-one-out cross-validation needs at least 2 seeds");
    }
    if (cfg.interval_size < 2) {
        throw ValidationError("interval size must be >= 2");
    }
    std::vector<MethodSpec> methods = cfg.methods;
    if (methods.empty()) {
        methods.push_back(*method_spec("hybrid"));
    }
    for (const auto& m : methods) {
        if (m.components.empty()) {
            throw ValidationError("method '" + m.name + "' has no components");
        }
    }

    // Seed-independent knowledge scores, one vector per channel.
    std::array<ScoreVector, 3> knowledge = {
        zero_scores(Method::symptom, net.node_count()),
        zero_scores(Method::comorbid, net.node_count()),
        zero_scores(Method::phenotype, net.node_count()),
    };
    for (const auto& table : tables) {
        const auto channel = knowledge_channel(table.tag);
        if (!channel) {
            throw ValidationError("association table without a knowledge-channel tag");
        }
        knowledge[*channel] = count_score(net, table).scores;
    }

    const auto col_op = column_normalized(net);
    const auto sym_op = symmetric_normalized(net);

    // Decoy candidates: network genes outside the seed set, grouped by
    // chromosome and sorted by (position, symbol). Keeping seeds out of
    // the intervals means every fold ranks the target against genes the
    // remaining seeds do not include.
    std::unordered_map<std::string, std::vector<ChromCandidate>> groups;
    for (const auto& row : positions.rows()) {
        const auto idx = net.index_of(row.symbol);
        if (!idx || seeds.contains(*idx)) {
            continue;
        }
        groups[row.chromosome].push_back(ChromCandidate{row.position, &row.symbol, *idx});
    }
    for (auto& [chrom, list] : groups) {
        (void)chrom;
        std::sort(list.begin(), list.end(), [](const ChromCandidate& l, const ChromCandidate& r) {
            if (l.position != r.position) return l.position < r.position;
            return *l.symbol < *r.symbol;
        });
    }

    const std::size_t q = seeds.size();
    std::vector<FoldOutcome> outcomes(q);

    unsigned threads = cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency();
    if (threads == 0) {
        threads = 1;
    }
    threads = std::min<unsigned>(threads, static_cast<unsigned>(q));

    std::atomic<std::size_t> cursor{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    const auto run_fold = [&](std::size_t fold) {
        const std::int32_t target = seeds.members[fold];
        const std::string& symbol = net.symbol(target);
        FoldOutcome& out = outcomes[fold];

        const PositionRow* tp = positions.find(symbol);
        if (tp == nullptr) {
            out.skipped = true;
            out.reason = "no position entry for '" + symbol + "'";
            return;
        }
        const auto git = groups.find(tp->chromosome);
        const std::size_t avail = git == groups.end() ? 0 : git->second.size();
        if (avail < cfg.interval_size - 1) {
            out.skipped = true;
            out.reason = "chromosome " + tp->chromosome + " offers " + std::to_string(avail) +
                         " candidate genes, interval needs " +
                         std::to_string(cfg.interval_size - 1);
            return;
        }
        const std::vector<ChromCandidate>& pool = git->second;

        // Nearest interval decoys: (|Δposition|, position, symbol) ascending.
        std::vector<std::size_t> order(pool.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
            const std::int64_t dl = std::abs(pool[l].position - tp->position);
            const std::int64_t dr = std::abs(pool[r].position - tp->position);
            if (dl != dr) return dl < dr;
            if (pool[l].position != pool[r].position) return pool[l].position < pool[r].position;
            return *pool[l].symbol < *pool[r].symbol;
        });
        order.resize(cfg.interval_size - 1);

        // Score against the remaining seeds.
        std::vector<std::int32_t> rest;
        rest.reserve(seeds.size() - 1);
        for (const std::int32_t s : seeds.members) {
            if (s != target) {
                rest.push_back(s);
            }
        }
        const SeedSet fold_seeds{std::move(rest)};
        const auto p0 = seed_start_vector(net, fold_seeds);

        std::vector<ScoreVector> components;
        components.reserve(6);
        components.push_back(propagate(col_op, p0, Method::rwr, cfg.rwr).scores);
        components.push_back(propagate(sym_op, p0, Method::np, cfg.np).scores);
        components.push_back(sp_score(shortest_distances(net, fold_seeds, cfg.sp_mode)));
        components.push_back(knowledge[0]);
        components.push_back(knowledge[1]);
        components.push_back(knowledge[2]);

        out.rank_per_method.reserve(methods.size());
        for (const auto& spec : methods) {
            const std::vector<double> fused =
                fused_values(net, components, FusionConfig{cfg.fusion_mode, spec.components});
            const double target_score = fused[static_cast<std::size_t>(target)];
            std::int32_t rank = 1;
            for (const std::size_t i : order) {
                const double d = fused[static_cast<std::size_t>(pool[i].node)];
                if (d >= target_score) {
                    ++rank;  // pessimistic: ties count against the target
                }
            }
            out.rank_per_method.push_back(rank);
        }
    };

    const auto worker = [&] {
        for (;;) {
            const std::size_t fold = cursor.fetch_add(1);
            if (fold >= q) {
                return;
            }
            {
                std::lock_guard lock(error_mutex);
                if (first_error) {
                    return;
                }
            }
            try {
                run_fold(fold);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) {
                    first_error = std::current_exception();
                }
                return;
            }
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }

    LoocvResult result;
    std::vector<std::vector<FoldRank>> folds_per_method(methods.size());
    for (std::size_t fold = 0; fold < q; ++fold) {
        const std::string& symbol = net.symbol(seeds.members[fold]);
        const FoldOutcome& out = outcomes[fold];
        if (out.skipped) {
            result.skipped.push_back(SkippedFold{symbol, out.reason});
            continue;
        }
        for (std::size_t m = 0; m < methods.size(); ++m) {
            folds_per_method[m].push_back(FoldRank{symbol, out.rank_per_method[m]});
        }
    }
    if (!folds_per_method.empty() && folds_per_method[0].empty()) {
        throw ValidationError("no evaluable folds (all " + std::to_string(q) +
                              " targets were skipped)");
    }
    for (std::size_t m = 0; m < methods.size(); ++m) {
        result.per_method.emplace_back(methods[m].name,
                                       make_report(std::move(folds_per_method[m]),
                                                   cfg.interval_size));
    }
    return result;
}

// ---------------------------------------------------------------------------
// Report writers
// ---------------------------------------------------------------------------

void write_fold_ranks_tsv(std::ostream& out, const EvalReport& report,
                          std::span<const SkippedFold> skipped) {
    out << "# target\trank\n";
    for (const auto& fold : report.folds) {
        out << fold.target << '\t' << fold.rank << '\n';
    }
    for (const auto& s : skipped) {
        out << "# skipped\t" << s.target << '\t' << s.reason << '\n';
    }
}

void write_roc_csv(std::ostream& out, const EvalReport& report) {
    out << "fpr,tpr\n";
    for (const auto& p : report.roc) {
        out << format_score(p.fpr) << ',' << format_score(p.tpr) << '\n';
    }
}

void write_summary_tsv(std::ostream& out,
                       std::span<const std::pair<std::string, EvalReport>> reports) {
    out << "# method\tAUC\tMRR\taverage_rank\ttop1\ttop5\n";
    for (const auto& [name, report] : reports) {
        out << name << '\t' << format_score(report.auc) << '\t' << format_score(report.mrr)
            << '\t' << format_score(report.average_rank) << '\t'
            << format_score(report.top1_frac) << '\t' << format_score(report.top5_frac)
            << '\n';
    }
}

}  // namespace netprio
