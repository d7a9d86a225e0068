#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "netprio/manifest.hpp"
#include "netprio/pipeline.hpp"

namespace CLI {
class App;
}

namespace netprio::cli {

// Input flags shared by the score and evaluate commands. Channel arrays
// are indexed symptom, comorbid, phenotype; empty string = absent.
struct InputFlags {
    std::string network;
    std::string seeds;
    std::array<std::string, 3> assoc;
    std::array<std::string, 3> rank;
    std::int64_t top_entities = 10;
    double cutoff = 0.154;
    bool no_weight_bounds = false;
};

struct ScoringFlags {
    double restart = 0.15;
    double np_restart = -1.0;  // < 0: follow --restart
    double tol = 1e-6;
    std::int64_t max_iters = 10000;
    std::string sp_mode = "hop";
    std::string fusion = "minmax";
};

struct ScoreCmd {
    InputFlags in;
    ScoringFlags scoring;
    std::string only;
    std::int64_t top = 0;
    bool exclude_seeds = false;
    std::string kernels = "auto";
    std::string out = "netprio";
    std::string config;
};

struct EvaluateCmd {
    InputFlags in;
    ScoringFlags scoring;
    std::string positions;
    std::int64_t interval_size = 100;
    std::string methods = "hybrid";
    std::int64_t threads = 0;
    std::string kernels = "auto";
    std::string out = "netprio";
    std::string config;
};

struct GenerateCmd {
    std::int64_t nodes = 300;
    std::int64_t seeds = 30;
    std::int64_t truth = 15;
    double background_prob = 0.02;
    double module_prob = 0.3;
    double weight_lo = 0.2;
    double weight_hi = 1.0;
    std::int64_t entities = 10;
    double hit_module = 0.6;
    double hit_background = 0.05;
    std::int64_t chromosomes = 2;
    std::int64_t rng_seed = 1;
    std::string out;
    std::string config;
};

struct AnalyzeCmd {
    std::string network;
    std::string seeds;
    std::string ranking;
    std::string expression;
    double cutoff = 0.154;
    bool no_weight_bounds = false;
    std::int64_t top = 100;
    std::string out = "netprio";
    std::string config;
};

void attach_input(CLI::App* cmd, InputFlags& f);
void attach_scoring(CLI::App* cmd, ScoringFlags& f);

// Resolves flag strings into pipeline options; throws ValidationError on
// unknown mode names or out-of-range values.
PipelineOptions make_pipeline_options(const InputFlags& in, const ScoringFlags& scoring);

// Comma-separated component names -> mask; empty spec -> empty mask.
std::vector<Method> parse_mask(const std::string& spec);

// Selects the compute backend ("auto" keeps runtime detection).
void apply_kernels(const std::string& name);

void print_warnings(const std::vector<std::string>& warnings);

std::ofstream open_output(const std::filesystem::path& path);

// Shared flags and input digests for score/evaluate manifests.
void fill_manifest(Manifest& m, const InputFlags& in, const ScoringFlags& scoring,
                   const std::string& kernels, const std::string& out);

// Unmapped seed symbols and association pairs; no file when all mapped.
void write_unmapped_report(const std::filesystem::path& path, const PipelineData& data);

// Expands --config files into explicit flags placed before the
// command-line flags, so explicit flags win. Manifest files work as
// configs: input.<name>.path keys map back to --<name>, meta.* and
// digest keys are skipped.
std::vector<std::string> expand_config_args(const CLI::App& app,
                                            const std::vector<std::string>& args);

void run_score(const ScoreCmd& cmd);
void run_evaluate(const EvaluateCmd& cmd);
void run_generate(const GenerateCmd& cmd);
void run_analyze(const AnalyzeCmd& cmd);

}  // namespace netprio::cli
