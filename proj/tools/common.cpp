#include "common.hpp"

#include <algorithm>
#include <iostream>

#include "CLI11.hpp"
#include "netprio/errors.hpp"
#include "netprio/kernels.hpp"

namespace netprio::cli {

void attach_input(CLI::App* cmd, InputFlags& f) {
    cmd->add_option("--network", f.network,
                    "Weighted edge list TSV: gene_a<TAB>gene_b<TAB>weight")
        ->required();
    cmd->add_option("--seeds", f.seeds, "Seed gene symbols, one per line")->required();
    cmd->add_option("--assoc-symptom", f.assoc[0],
                    "Symptom-similar disease associations: entity<TAB>gene");
    cmd->add_option("--assoc-comorbid", f.assoc[1],
                    "Comorbid disease associations: entity<TAB>gene");
    cmd->add_option("--assoc-phenotype", f.assoc[2],
                    "Phenotype associations: entity<TAB>gene");
    cmd->add_option("--rank-symptom", f.rank[0],
                    "Entity similarity ranking for the symptom channel");
    cmd->add_option("--rank-comorbid", f.rank[1],
                    "Entity similarity ranking for the comorbid channel");
    cmd->add_option("--rank-phenotype", f.rank[2],
                    "Entity similarity ranking for the phenotype channel");
    cmd->add_option("--top-entities", f.top_entities,
                    "Ranked entities kept per channel (0 = all)")
        ->capture_default_str();
    cmd->add_option("--cutoff", f.cutoff, "Drop edges below this weight")
        ->capture_default_str();
    cmd->add_flag("--no-weight-bounds", f.no_weight_bounds,
                  "Accept edge weights above 1");
}

void attach_scoring(CLI::App* cmd, ScoringFlags& f) {
    cmd->add_option("--restart", f.restart, "Restart probability, in (0, 1)")
        ->capture_default_str();
    cmd->add_option("--np-restart", f.np_restart,
                    "Propagation restart parameter (default: --restart)");
    cmd->add_option("--tol", f.tol, "L1 convergence tolerance")->capture_default_str();
    cmd->add_option("--max-iters", f.max_iters, "Iteration guard")->capture_default_str();
    cmd->add_option("--sp-mode", f.sp_mode, "Edge length: hop, neglog, inverse")
        ->capture_default_str();
    cmd->add_option("--fusion", f.fusion, "Score combination: minmax, raw")
        ->capture_default_str();
}

PipelineOptions make_pipeline_options(const InputFlags& in, const ScoringFlags& scoring) {
    PipelineOptions p;
    p.network_path = in.network;
    p.seeds_path = in.seeds;
    for (std::size_t c = 0; c < 3; ++c) {
        if (!in.assoc[c].empty()) {
            p.associations[c] = in.assoc[c];
        }
        if (!in.rank[c].empty()) {
            p.rankings[c] = in.rank[c];
        }
    }
    if (in.top_entities < 0) {
        throw ValidationError("--top-entities must be >= 0");
    }
    p.top_entities = static_cast<std::size_t>(in.top_entities);
    if (in.cutoff < 0.0) {
        throw ValidationError("--cutoff must be >= 0");
    }
    p.load.cutoff = in.cutoff;
    p.load.bounded_weights = !in.no_weight_bounds;

    if (scoring.max_iters < 1 || scoring.max_iters > 1000000000) {
        throw ValidationError("--max-iters must be in [1, 1e9]");
    }
    p.rwr.restart = scoring.restart;
    p.rwr.tolerance = scoring.tol;
    p.rwr.max_iters = static_cast<int>(scoring.max_iters);
    p.np = p.rwr;
    if (scoring.np_restart >= 0.0) {
        p.np.restart = scoring.np_restart;
    }
    const auto sp = length_mode_from_name(scoring.sp_mode);
    if (!sp) {
        throw ValidationError("unknown --sp-mode '" + scoring.sp_mode +
                              "' (hop, neglog, inverse)");
    }
    p.sp_mode = *sp;
    const auto fusion = fusion_mode_from_name(scoring.fusion);
    if (!fusion) {
        throw ValidationError("unknown --fusion '" + scoring.fusion + "' (minmax, raw)");
    }
    p.fusion_mode = *fusion;
    return p;
}

std::vector<Method> parse_mask(const std::string& spec) {
    std::vector<Method> mask;
    std::size_t start = 0;
    while (start <= spec.size() && !spec.empty()) {
        const std::size_t comma = spec.find(',', start);
        const std::string name =
            spec.substr(start, comma == std::string::npos ? comma : comma - start);
        const auto m = method_from_name(name);
        if (!m || *m == Method::fused) {
            throw ValidationError("unknown component '" + name + "' in --only");
        }
        if (std::find(mask.begin(), mask.end(), *m) != mask.end()) {
            throw ValidationError("component '" + name + "' listed twice in --only");
        }
        mask.push_back(*m);
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return mask;
}

void apply_kernels(const std::string& name) {
    if (name == "auto") {
        kernels::set_backend(kernels::detect_backend());
    } else if (name == "scalar") {
        kernels::set_backend(kernels::Backend::scalar);
    } else if (name == "avx2") {
        kernels::set_backend(kernels::Backend::avx2);
    } else {
        throw ValidationError("unknown --kernels '" + name + "' (auto, scalar, avx2)");
    }
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) {
        std::cerr << "warning: " << w << '\n';
    }
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    return out;
}

void fill_manifest(Manifest& m, const InputFlags& in, const ScoringFlags& scoring,
                   const std::string& kernels, const std::string& out) {
    m.set("cutoff", in.cutoff);
    m.set("no-weight-bounds", in.no_weight_bounds);
    m.set("top-entities", in.top_entities);
    m.set("restart", scoring.restart);
    m.set("np-restart", scoring.np_restart >= 0.0 ? scoring.np_restart : scoring.restart);
    m.set("tol", scoring.tol);
    m.set("max-iters", scoring.max_iters);
    m.set("sp-mode", scoring.sp_mode);
    m.set("fusion", scoring.fusion);
    m.set("kernels", kernels);
    m.set("meta.backend", std::string(kernels::backend_name(kernels::active_backend())));
    m.set("out", out);
    m.add_input("network", in.network);
    m.add_input("seeds", in.seeds);
    static const char* kAssocNames[3] = {"assoc-symptom", "assoc-comorbid",
                                         "assoc-phenotype"};
    static const char* kRankNames[3] = {"rank-symptom", "rank-comorbid", "rank-phenotype"};
    for (std::size_t c = 0; c < 3; ++c) {
        if (!in.assoc[c].empty()) {
            m.add_input(kAssocNames[c], in.assoc[c]);
        }
        if (!in.rank[c].empty()) {
            m.add_input(kRankNames[c], in.rank[c]);
        }
    }
}

void write_unmapped_report(const std::filesystem::path& path, const PipelineData& data) {
    if (data.unmapped_seeds.empty() && data.unmapped.empty()) {
        return;
    }
    auto out = open_output(path);
    out << "# source\tentity\tgene\n";
    for (const auto& symbol : data.unmapped_seeds) {
        out << "seeds\t-\t" << symbol << '\n';
    }
    for (const auto& u : data.unmapped) {
        out << method_name(u.channel) << '\t' << u.entity << '\t' << u.gene << '\n';
    }
}

namespace {

// One key=value line of a config file mapped onto a CLI flag.
void apply_config_line(const CLI::App& sub, const std::string& file, std::size_t line_no,
                       const std::string& line, std::vector<std::string>& injected) {
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
        throw ValidationError(file, line_no, "expected key=value");
    }
    std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    if (key.rfind("meta.", 0) == 0 || key.rfind("output.", 0) == 0) {
        return;
    }
    if (key.rfind("input.", 0) == 0) {
        // Manifests record inputs as input.<flag>.path plus a digest;
        // only the path maps back to a flag.
        if (key.size() > 11 && key.compare(key.size() - 5, 5, ".path") == 0) {
            key = key.substr(6, key.size() - 11);
        } else {
            return;
        }
    }
    if (key == "config") {
        std::cerr << "warning: config: nested 'config' key ignored\n";
        return;
    }
    const CLI::Option* opt = sub.get_option_no_throw("--" + key);
    if (opt == nullptr) {
        std::cerr << "warning: config: ignoring unknown key '" << key << "'\n";
        return;
    }
    if (opt->get_expected() == 0) {
        if (value == "true" || value == "1") {
            injected.push_back("--" + key);
        } else if (value != "false" && value != "0") {
            throw ValidationError(file, line_no,
                                  "flag '" + key + "' takes true or false, got '" +
                                      value + "'");
        }
        return;
    }
    injected.push_back("--" + key);
    injected.push_back(value);
}

}  // namespace

std::vector<std::string> expand_config_args(const CLI::App& app,
                                            const std::vector<std::string>& args) {
    if (args.empty()) {
        return args;
    }
    const CLI::App* sub = app.get_subcommand_no_throw(args[0]);
    if (sub == nullptr) {
        return args;
    }
    std::vector<std::string> configs;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            configs.push_back(args[++i]);
        } else if (args[i].rfind("--config=", 0) == 0) {
            configs.push_back(args[i].substr(9));
        }
    }
    if (configs.empty()) {
        return args;
    }
    std::vector<std::string> injected;
    for (const auto& file : configs) {
        std::ifstream in(file);
        if (!in) {
            throw IoError("cannot open config file '" + file + "'");
        }
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
            if (line.empty() || line[0] == '#') {
                continue;
            }
            apply_config_line(*sub, file, line_no, line, injected);
        }
    }
    std::vector<std::string> out;
    out.reserve(args.size() + injected.size());
    out.push_back(args[0]);
    out.insert(out.end(), injected.begin(), injected.end());
    out.insert(out.end(), args.begin() + 1, args.end());
    return out;
}

}  // namespace netprio::cli
