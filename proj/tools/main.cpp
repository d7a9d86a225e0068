#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "common.hpp"
#include "netprio/errors.hpp"
#include "netprio/version.hpp"

namespace {

// Exit codes: 0 success, 1 validation/parse/usage, 2 convergence
// failure, 3 I/O failure.
constexpr int kExitValidation = 1;
constexpr int kExitConvergence = 2;
constexpr int kExitIo = 3;

}  // namespace

int main(int argc, char** argv) {
    using namespace netprio;

    CLI::App app{"Network-based gene prioritization toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    cli::ScoreCmd score;
    cli::EvaluateCmd evaluate;
    cli::GenerateCmd generate;
    cli::AnalyzeCmd analyze;

    CLI::App* s = app.add_subcommand("score", "Rank every network gene for a seed set");
    s->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    cli::attach_input(s, score.in);
    cli::attach_scoring(s, score.scoring);
    s->add_option("--only", score.only,
                  "Comma-separated component subset (default: all six)");
    s->add_option("--top", score.top, "Keep only the first N ranking rows (0 = all)")->capture_default_str();
    s->add_flag("--exclude-seeds", score.exclude_seeds,
                "Drop seed genes from the ranking output");
    s->add_option("--kernels", score.kernels, "Compute backend: auto, scalar, avx2")->capture_default_str();
    s->add_option("--out", score.out, "Output file prefix")->capture_default_str();
    s->add_option("--config", score.config,
                  "key=value file applied before explicit flags");
    s->callback([&] { cli::run_score(score); });

    CLI::App* e = app.add_subcommand(
        "evaluate", "Leave-one-out cross-validation over the seed set");
    e->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    cli::attach_input(e, evaluate.in);
    cli::attach_scoring(e, evaluate.scoring);
    e->add_option("--positions", evaluate.positions,
                  "Gene positions TSV: gene<TAB>chromosome<TAB>position_bp")
        ->required();
    e->add_option("--interval-size", evaluate.interval_size,
                  "Genes per artificial linkage interval")->capture_default_str();
    e->add_option("--methods", evaluate.methods,
                  "Comma-separated methods: hybrid, netcombo, rwr, np, sp, symptom, "
                  "comorbid, phenotype")->capture_default_str();
    e->add_option("--threads", evaluate.threads, "Worker cap (0 = hardware)")->capture_default_str();
    e->add_option("--kernels", evaluate.kernels, "Compute backend: auto, scalar, avx2")->capture_default_str();
    e->add_option("--out", evaluate.out, "Output file prefix")->capture_default_str();
    e->add_option("--config", evaluate.config,
                  "key=value file applied before explicit flags");
    e->callback([&] { cli::run_evaluate(evaluate); });

    CLI::App* g = app.add_subcommand("generate", "Write a synthetic benchmark bundle");
    g->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    g->add_option("--nodes", generate.nodes, "Gene count")->capture_default_str();
    g->add_option("--seeds", generate.seeds, "Seed gene count")->capture_default_str();
    g->add_option("--truth", generate.truth, "Held-out module genes beyond the seeds")->capture_default_str();
    g->add_option("--background-prob", generate.background_prob,
                  "Background edge probability")->capture_default_str();
    g->add_option("--module-prob", generate.module_prob,
                  "Within-module edge probability")->capture_default_str();
    g->add_option("--weight-lo", generate.weight_lo, "Minimum edge weight")->capture_default_str();
    g->add_option("--weight-hi", generate.weight_hi, "Maximum edge weight")->capture_default_str();
    g->add_option("--entities", generate.entities, "Entities per knowledge channel")->capture_default_str();
    g->add_option("--hit-module", generate.hit_module,
                  "Entity hit probability for module genes")->capture_default_str();
    g->add_option("--hit-background", generate.hit_background,
                  "Entity hit probability for background genes")->capture_default_str();
    g->add_option("--chromosomes", generate.chromosomes, "Chromosome count")->capture_default_str();
    g->add_option("--rng-seed", generate.rng_seed, "Generator seed")->capture_default_str();
    g->add_option("--out", generate.out, "Output directory")->required();
    g->add_option("--config", generate.config,
                  "key=value file applied before explicit flags");
    g->callback([&] { cli::run_generate(generate); });

    CLI::App* a = app.add_subcommand(
        "analyze", "Proximity, mediator, and expression analysis of a ranking");
    a->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    a->add_option("--network", analyze.network,
                  "Weighted edge list TSV: gene_a<TAB>gene_b<TAB>weight")
        ->required();
    a->add_option("--seeds", analyze.seeds, "Seed gene symbols, one per line")
        ->required();
    a->add_option("--ranking", analyze.ranking, "Ranking TSV from the score command")
        ->required();
    a->add_option("--expression", analyze.expression,
                  "Expression matrix TSV; first data row labels samples tumor/normal");
    a->add_option("--cutoff", analyze.cutoff, "Drop edges below this weight")->capture_default_str();
    a->add_flag("--no-weight-bounds", analyze.no_weight_bounds,
                "Accept edge weights above 1");
    a->add_option("--top", analyze.top, "Top candidate genes analyzed (0 = all)")->capture_default_str();
    a->add_option("--out", analyze.out, "Output file prefix")->capture_default_str();
    a->add_option("--config", analyze.config,
                  "key=value file applied before explicit flags");
    a->callback([&] { cli::run_analyze(analyze); });

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        args = cli::expand_config_args(app, args);
        std::vector<const char*> cargs;
        cargs.reserve(args.size() + 1);
        cargs.push_back(argv[0]);
        for (const auto& arg : args) {
            cargs.push_back(arg.c_str());
        }
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : kExitValidation;
    } catch (const ConvergenceError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitConvergence;
    } catch (const IoError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitIo;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitValidation;
    }
    return 0;
}
