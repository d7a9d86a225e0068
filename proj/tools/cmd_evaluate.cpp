#include <algorithm>
#include <iostream>

#include "common.hpp"
#include "netprio/errors.hpp"
#include "netprio/evaluation.hpp"

namespace netprio::cli {

namespace {

std::vector<MethodSpec> parse_methods(const std::string& spec) {
    std::vector<MethodSpec> methods;
    std::size_t start = 0;
    while (start <= spec.size() && !spec.empty()) {
        const std::size_t comma = spec.find(',', start);
        const std::string name =
            spec.substr(start, comma == std::string::npos ? comma : comma - start);
        auto m = method_spec(name);
        if (!m) {
            throw ValidationError("unknown method '" + name + "' in --methods");
        }
        const auto dup = std::find_if(methods.begin(), methods.end(),
                                      [&](const MethodSpec& s) { return s.name == name; });
        if (dup != methods.end()) {
            throw ValidationError("method '" + name + "' listed twice in --methods");
        }
        methods.push_back(std::move(*m));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    if (methods.empty()) {
        throw ValidationError("--methods must name at least one method");
    }
    return methods;
}

}  // namespace

void run_evaluate(const EvaluateCmd& cmd) {
    apply_kernels(cmd.kernels);
    if (cmd.interval_size < 2) {
        throw ValidationError("--interval-size must be >= 2");
    }
    if (cmd.threads < 0) {
        throw ValidationError("--threads must be >= 0");
    }
    const PipelineOptions opts = make_pipeline_options(cmd.in, cmd.scoring);

    PipelineData data = load_pipeline(opts);
    print_warnings(data.warnings);
    const PositionTable positions = load_positions(cmd.positions);
    if (positions.duplicates_dropped() > 0) {
        std::cerr << "warning: dropped " << positions.duplicates_dropped()
                  << " duplicate position rows\n";
    }

    EvalConfig ecfg;
    ecfg.interval_size = static_cast<std::size_t>(cmd.interval_size);
    ecfg.threads = static_cast<unsigned>(cmd.threads);
    ecfg.fusion_mode = opts.fusion_mode;
    ecfg.rwr = opts.rwr;
    ecfg.np = opts.np;
    ecfg.sp_mode = opts.sp_mode;
    ecfg.methods = parse_methods(cmd.methods);

    const LoocvResult result = loocv(data.network, data.seeds, data.tables, positions, ecfg);
    for (const auto& skip : result.skipped) {
        std::cerr << "warning: skipped fold " << skip.target << ": " << skip.reason << '\n';
    }

    for (const auto& [name, report] : result.per_method) {
        {
            auto out = open_output(cmd.out + "." + name + ".ranks.tsv");
            write_fold_ranks_tsv(out, report, result.skipped);
        }
        {
            auto out = open_output(cmd.out + "." + name + ".roc.csv");
            write_roc_csv(out, report);
        }
    }
    {
        auto out = open_output(cmd.out + ".summary.tsv");
        write_summary_tsv(out, result.per_method);
    }
    write_summary_tsv(std::cout, result.per_method);
    write_unmapped_report(cmd.out + ".unmapped.tsv", data);

    Manifest m("evaluate");
    fill_manifest(m, cmd.in, cmd.scoring, cmd.kernels, cmd.out);
    m.add_input("positions", cmd.positions);
    m.set("interval-size", cmd.interval_size);
    m.set("methods", cmd.methods);
    m.set("threads", cmd.threads);
    m.write(cmd.out + ".manifest.txt");
}

}  // namespace netprio::cli
