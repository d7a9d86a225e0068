#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "netprio/diffusion.hpp"
#include "netprio/fusion.hpp"
#include "netprio/knowledge.hpp"
#include "netprio/network.hpp"

namespace netprio {

// Genomic coordinates used to assemble artificial linkage intervals.
struct PositionRow {
    std::string symbol;
    std::string chromosome;
    std::int64_t position = 0;  // base pairs, >= 0
};

class PositionTable {
public:
    // First row wins on duplicate symbols; returns false when dropped.
    bool insert(PositionRow row);

    const std::vector<PositionRow>& rows() const noexcept { return rows_; }
    const PositionRow* find(std::string_view symbol) const;
    std::size_t duplicates_dropped() const noexcept { return duplicates_; }

private:
    std::vector<PositionRow> rows_;
    std::unordered_map<std::string, std::size_t> index_;
    std::size_t duplicates_ = 0;
};

// Loads gene<TAB>chromosome<TAB>position_bp.
PositionTable load_positions(const std::filesystem::path& path);

// Target plus the L-1 same-chromosome genes nearest by absolute base-pair
// distance (ties by position, then symbol, ascending).
struct LinkageInterval {
    std::string target;
    std::vector<std::string> decoys;  // L - 1 symbols
};

struct IntervalOutcome {
    std::optional<LinkageInterval> interval;
    std::string skip_reason;  // set when interval is empty
};

IntervalOutcome build_interval(const std::string& target, const PositionTable& positions,
                               std::size_t interval_size);

struct FoldRank {
    std::string target;
    std::int32_t rank = 0;  // 1-based within the interval
};

struct SkippedFold {
    std::string target;
    std::string reason;
};

struct RocPoint {
    double fpr = 0.0;
    double tpr = 0.0;
};

struct EvalReport {
    std::size_t interval_size = 0;
    std::vector<FoldRank> folds;
    std::vector<RocPoint> roc;
    double auc = 0.0;
    double mrr = 0.0;
    double average_rank = 0.0;
    double top1_frac = 0.0;
    double top5_frac = 0.0;
};

// A named component mask evaluated by the cross-validation.
struct MethodSpec {
    std::string name;
    std::vector<Method> components;
};

// hybrid (all six), netcombo (rwr+np+sp), or a single component name.
std::optional<MethodSpec> method_spec(std::string_view name);

struct EvalConfig {
    std::size_t interval_size = 100;
    unsigned threads = 0;  // 0 = hardware concurrency
    FusionMode fusion_mode = FusionMode::minmax;
    DiffusionConfig rwr;
    DiffusionConfig np;
    LengthMode sp_mode = LengthMode::hop;
    std::vector<MethodSpec> methods;  // empty = {hybrid}
};

struct LoocvResult {
    std::vector<SkippedFold> skipped;
    std::vector<std::pair<std::string, EvalReport>> per_method;
};

// Leave-one-out cross-validation: each seed in turn is removed from the
// seed set, scored by the full pipeline against the remaining seeds, and
// ranked (pessimistic ties) inside its artificial linkage interval.
// Decoys are drawn from network genes outside the seed set so every
// interval gene has a comparable score. Fold results are independent of
// thread count. `tables` holds up to one association table per knowledge
// channel; missing channels contribute zero scores.
LoocvResult loocv(const Network& net, const SeedSet& seeds,
                  std::span<const AssociationTable> tables, const PositionTable& positions,
                  const EvalConfig& cfg);

// ROC over rank cutoffs k = 0..L: a fold is a true positive at k when its
// rank <= k; fpr(k) = k / L. AUC by the trapezoidal rule.
std::pair<std::vector<RocPoint>, double> roc_and_auc(std::span<const std::int32_t> ranks,
                                                     std::size_t interval_size);

double mean_reciprocal_rank(std::span<const std::int32_t> ranks);

struct RankSummary {
    double average_rank = 0.0;
    double top1_frac = 0.0;  // fraction with rank <= ceil(L / 100)
    double top5_frac = 0.0;  // fraction with rank <= ceil(L / 20)
};

RankSummary rank_summaries(std::span<const std::int32_t> ranks, std::size_t interval_size);

// Assembles a full report from per-fold ranks.
EvalReport make_report(std::vector<FoldRank> folds, std::size_t interval_size);

// Hop distances from the seed set; histogram over a candidate gene list.
struct ProximitySummary {
    // (distance, count), distance ascending; unreachable candidates are
    // tallied separately.
    std::vector<std::pair<std::int32_t, std::size_t>> histogram;
    std::size_t unreachable = 0;
    std::size_t total = 0;    // candidates found in the network
    std::size_t missing = 0;  // candidates absent from the network
    double frac_within_1 = 0.0;
    double frac_within_2 = 0.0;
};

ProximitySummary proximity_summary(const Network& net, std::span<const std::string> candidates,
                                   const SeedSet& seeds);

struct MediatorCount {
    std::string symbol;
    std::int64_t count = 0;
};

// For every (candidate, seed) pair, walks one canonical shortest path
// (minimal-symbol predecessor at each step) and counts interior nodes.
// Sorted by count descending, then symbol.
std::vector<MediatorCount> mediator_counts(const Network& net,
                                           std::span<const std::string> candidates,
                                           const SeedSet& seeds);

struct MannWhitneyResult {
    double u_a = 0.0;
    double u_b = 0.0;
    double p_value = 1.0;
    bool exact = false;
};

// Two-sided Mann-Whitney U test. Exact enumeration when n_a * n_b <= 20,
// tie-corrected normal approximation with continuity correction otherwise.
MannWhitneyResult mann_whitney(std::span<const double> a, std::span<const double> b);

// U statistic of sample a (ties add 1/2 per tied pair).
double mann_whitney_u(std::span<const double> a, std::span<const double> b);

// Both branches exposed so their agreement can be checked directly.
double mann_whitney_exact_p(std::span<const double> a, std::span<const double> b);
double mann_whitney_normal_p(std::span<const double> a, std::span<const double> b);

// Report writers (byte-stable).
void write_fold_ranks_tsv(std::ostream& out, const EvalReport& report,
                          std::span<const SkippedFold> skipped);
void write_roc_csv(std::ostream& out, const EvalReport& report);
void write_summary_tsv(std::ostream& out,
                       std::span<const std::pair<std::string, EvalReport>> reports);

}  // namespace netprio
