#include "common.hpp"
#include "netprio/errors.hpp"

namespace netprio::cli {

void run_score(const ScoreCmd& cmd) {
    apply_kernels(cmd.kernels);
    if (cmd.top < 0) {
        throw ValidationError("--top must be >= 0");
    }
    PipelineOptions opts = make_pipeline_options(cmd.in, cmd.scoring);
    opts.mask = parse_mask(cmd.only);

    PipelineData data = load_pipeline(opts);
    print_warnings(data.warnings);

    const std::vector<ScoreVector> vectors = component_scores(data, data.seeds, opts);
    const FusionConfig fcfg{opts.fusion_mode,
                            opts.mask.empty() ? all_components() : opts.mask};
    const Ranking ranking = fuse(data.network, vectors, fcfg);

    Ranking visible;
    for (const auto& entry : ranking.entries) {
        if (cmd.exclude_seeds) {
            const auto idx = data.network.index_of(entry.symbol);
            if (idx && data.seeds.contains(*idx)) {
                continue;
            }
        }
        visible.entries.push_back(entry);
        if (cmd.top > 0 && visible.entries.size() == static_cast<std::size_t>(cmd.top)) {
            break;
        }
    }

    {
        auto out = open_output(cmd.out + ".ranking.tsv");
        write_ranking_tsv(out, data.network, visible, vectors, fcfg);
    }
    write_unmapped_report(cmd.out + ".unmapped.tsv", data);

    Manifest m("score");
    fill_manifest(m, cmd.in, cmd.scoring, cmd.kernels, cmd.out);
    m.set("only", cmd.only);
    m.set("top", cmd.top);
    m.set("exclude-seeds", cmd.exclude_seeds);
    m.write(cmd.out + ".manifest.txt");
}

}  // namespace netprio::cli
