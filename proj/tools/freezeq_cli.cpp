// freezeq command line tool. Talks to the shared library only through the
// public C API.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "freezeq/freezeq.h"

namespace {

// Exit codes: 0 ok, 2 config/usage, 3 resource, 4 numeric.
int exit_code(fq_status status) {
    switch (status) {
        case FQ_OK:
            return 0;
        case FQ_ERR_RESOURCE:
            return 3;
        case FQ_ERR_NUMERIC:
            return 4;
        default:
            return 2;
    }
}

int report(fq_status status) {
    if (status != FQ_OK) std::fprintf(stderr, "error: %s\n", fq_last_error());
    return exit_code(status);
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

std::vector<const char*> c_strings(const std::vector<std::string>& v) {
    std::vector<const char*> out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(s.c_str());
    return out;
}

struct common_opts {
    std::string config_path;
    std::vector<std::string> overrides;
    std::string output_dir;
    long long seed = -1;
    int jobs = 1;
};

void add_config_opts(CLI::App* cmd, common_opts& opts, bool with_output, bool with_jobs) {
    cmd->add_option("-c,--config", opts.config_path, "experiment config file (JSON)")
        ->required();
    cmd->add_option("--set", opts.overrides, "override, repeatable: section.key=value");
    cmd->add_option("--seed", opts.seed, "shorthand for --set runs.seed=N");
    if (with_output)
        cmd->add_option("-o,--output", opts.output_dir,
                        "output directory (default: FREEZEQ_OUTPUT_DIR or config)");
    if (with_jobs) cmd->add_option("-j,--jobs", opts.jobs, "parallel seeds")->check(CLI::PositiveNumber);
}

int load_config(common_opts& opts, std::string& text) {
    if (!read_file(opts.config_path, text)) {
        std::fprintf(stderr, "error: cannot read config file: %s\n", opts.config_path.c_str());
        return 2;
    }
    if (opts.seed >= 0) opts.overrides.push_back("runs.seed=" + std::to_string(opts.seed));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sequential gate optimizers with gate freezing"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(fq_version()));

    common_opts run_opts, sweep_opts, exact_opts, mi_opts;
    std::string heatmap_records, heatmap_output;

    auto* run = app.add_subcommand("run", "optimize under one config, write run records");
    add_config_opts(run, run_opts, true, true);

    auto* sweep = app.add_subcommand(
        "sweep", "baseline plus freezing variants over a threshold list");
    add_config_opts(sweep, sweep_opts, true, true);

    auto* exact = app.add_subcommand("exact", "print the exact ground-state energy");
    add_config_opts(exact, exact_opts, false, false);

    auto* heatmap = app.add_subcommand(
        "heatmap", "aggregate run records into per-threshold freeze heat maps");
    heatmap->add_option("records_dir", heatmap_records, "directory of run_*.json records")
        ->required();
    heatmap->add_option("-o,--output", heatmap_output, "output directory");

    auto* mi = app.add_subcommand("mutual-info", "averaged pairwise mutual information matrix");
    add_config_opts(mi, mi_opts, true, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (run->parsed()) {
        std::string text;
        if (int rc = load_config(run_opts, text)) return rc;
        auto ov = c_strings(run_opts.overrides);
        return report(fq_cmd_run(text.c_str(), ov.data(), ov.size(), run_opts.output_dir.c_str(),
                                 run_opts.jobs));
    }
    if (sweep->parsed()) {
        std::string text;
        if (int rc = load_config(sweep_opts, text)) return rc;
        auto ov = c_strings(sweep_opts.overrides);
        return report(fq_cmd_sweep(text.c_str(), ov.data(), ov.size(),
                                   sweep_opts.output_dir.c_str(), sweep_opts.jobs));
    }
    if (exact->parsed()) {
        std::string text;
        if (int rc = load_config(exact_opts, text)) return rc;
        auto ov = c_strings(exact_opts.overrides);
        double energy = 0.0;
        fq_status status = fq_cmd_exact(text.c_str(), ov.data(), ov.size(), &energy);
        if (status == FQ_OK) std::printf("%.10g\n", energy);
        return report(status);
    }
    if (heatmap->parsed())
        return report(fq_cmd_heatmap(heatmap_records.c_str(), heatmap_output.c_str()));
    if (mi->parsed()) {
        std::string text;
        if (int rc = load_config(mi_opts, text)) return rc;
        auto ov = c_strings(mi_opts.overrides);
        return report(
            fq_cmd_mutual_info(text.c_str(), ov.data(), ov.size(), mi_opts.output_dir.c_str()));
    }
    return 2;
}
