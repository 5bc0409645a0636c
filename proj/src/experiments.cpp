#include "experiments.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace fq::experiments {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// short form used in variant names and file names
std::string format_threshold(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

// Staged output: everything is prepared in memory, written to temp files,
// then renamed, so a failed command leaves no partial files behind.
class output_stage {
public:
    explicit output_stage(fs::path dir) : dir_(std::move(dir)) {}

    void add(const std::string& name, std::string content) {
        files_.emplace_back(name, std::move(content));
    }

    void commit() {
        fs::create_directories(dir_);
        std::vector<std::pair<fs::path, fs::path>> staged;
        for (const auto& [name, content] : files_) {
            fs::path final_path = dir_ / name;
            fs::create_directories(final_path.parent_path());
            fs::path tmp = final_path;
            tmp += ".tmp";
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) throw resource_error("cannot write output file: " + tmp.string());
            out << content;
            out.close();
            if (!out) throw resource_error("cannot write output file: " + tmp.string());
            staged.emplace_back(tmp, final_path);
        }
        for (const auto& [tmp, final_path] : staged) fs::rename(tmp, final_path);
    }

private:
    fs::path dir_;
    std::vector<std::pair<std::string, std::string>> files_;
};

json metadata_json(const std::string& hash, const config::experiment_config& cfg,
                   const std::string& command) {
    json meta;
    meta["config_hash"] = hash;
    meta["seed"] = cfg.seed;
    meta["version"] = kVersion;
    meta["command"] = command;
    meta["entropy_log_base"] = 2;
    meta["frozen_gates_counted_below_threshold"] = true;
    return meta;
}

// Effective output directory: explicit argument wins, then the config's
// output.directory resolved against FREEZEQ_OUTPUT_DIR (or the cwd).
fs::path resolve_output_dir(const std::string& arg, const std::string& from_config) {
    if (!arg.empty()) return arg;
    const char* root_env = std::getenv("FREEZEQ_OUTPUT_DIR");
    const fs::path root = root_env && *root_env ? fs::path(root_env) : fs::path(".");
    return from_config.empty() ? root : root / from_config;
}

std::string run_index_name(int i) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "run_%03d.json", i);
    return buf;
}

json freezing_json(const config::experiment_config& cfg, double threshold) {
    json fr;
    fr["enabled"] = cfg.freezing_enabled;
    if (cfg.freezing_enabled) {
        fr["metric"] = freezing::metric_to_string(cfg.metric);
        fr["mode"] = cfg.mode == freezing::freeze_mode::fixed ? "fixed" : "incremental";
        fr["kappa"] = cfg.kappa;
        fr["threshold"] = threshold;
    }
    return fr;
}

std::string energies_csv(const std::vector<harness::run_record>& records) {
    std::ostringstream csv;
    csv << "run,update,slot,energy,distance\n";
    for (std::size_t r = 0; r < records.size(); ++r)
        for (std::size_t u = 0; u < records[r].updates.size(); ++u) {
            const auto& up = records[r].updates[u];
            csv << r << ',' << u << ',' << up.slot << ',' << format_number(up.energy) << ','
                << format_number(up.distance) << '\n';
        }
    return csv.str();
}

std::string freeze_events_csv(const harness::run_record& rec, const ansatz::ansatz_spec& spec) {
    std::ostringstream csv;
    csv << "sweep,slot,qubit,layer,distance,kappa_at_freeze\n";
    for (const auto& ev : rec.freeze_events) {
        const auto& slot = spec.slots[ev.slot];
        csv << ev.sweep << ',' << ev.slot << ',' << slot.qubit << ',' << slot.param_layer << ','
            << format_number(ev.distance) << ',' << ev.kappa_at_freeze << '\n';
    }
    return csv.str();
}

std::string heatmap_csv(const std::vector<std::vector<double>>& grid) {
    std::ostringstream csv;
    csv << "qubit";
    if (!grid.empty())
        for (std::size_t l = 0; l < grid[0].size(); ++l) csv << ",layer_" << l;
    csv << '\n';
    for (std::size_t q = 0; q < grid.size(); ++q) {
        csv << q;
        for (double cell : grid[q]) csv << ',' << format_number(cell);
        csv << '\n';
    }
    return csv.str();
}

}  // namespace

std::string pauli_sum_to_json(const simcore::pauli_sum& op) {
    json doc;
    doc["n_qubits"] = op.n_qubits;
    doc["constant_offset"] = op.constant_offset;
    json terms = json::array();
    for (const auto& term : op.terms) {
        std::string text;
        for (auto p : term.ops) text += simcore::pauli_char(p);
        terms.push_back({{"coefficient", term.coefficient}, {"paulis", text}});
    }
    doc["terms"] = std::move(terms);
    return doc.dump(2);
}

simcore::pauli_sum pauli_sum_from_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw config_error("operator document is not valid JSON");
    simcore::pauli_sum op;
    try {
        op.n_qubits = doc.at("n_qubits").get<int>();
        op.constant_offset = doc.value("constant_offset", 0.0);
        for (const auto& term : doc.at("terms"))
            op.add_term(term.at("coefficient").get<double>(),
                        term.at("paulis").get<std::string>());
    } catch (const json::exception& e) {
        throw config_error(std::string("invalid operator document: ") + e.what());
    }
    return op;
}

std::string run_record_to_json(const harness::run_record& rec, const config::experiment_config& cfg,
                               const std::string& variant, double threshold,
                               const std::string& hash) {
    json doc;
    doc["schema"] = "freezeq.run_record/1";
    doc["config_hash"] = hash;
    doc["variant"] = variant;
    doc["optimizer"] = optimizers::optimizer_to_string(cfg.optimizer);
    doc["ansatz"] = {{"family", ansatz::family_to_string(cfg.family)},
                     {"n_qubits", cfg.n_qubits()},
                     {"layers", cfg.layers}};
    doc["freezing"] = freezing_json(cfg, threshold);
    doc["seed"] = rec.seed;
    doc["budget"] = rec.budget;
    doc["initial_energy"] = rec.initial_energy;
    doc["final_energy"] = rec.final_energy;

    json updates = json::array();
    for (const auto& up : rec.updates) updates.push_back({up.slot, up.energy, up.distance});
    doc["updates"] = std::move(updates);

    json sweeps = json::array();
    for (const auto& sw : rec.sweeps) sweeps.push_back({sw.updates, sw.frozen_skipped, sw.exceed_pct});
    doc["sweeps"] = std::move(sweeps);

    json events = json::array();
    for (const auto& ev : rec.freeze_events)
        events.push_back({ev.sweep, ev.slot, ev.distance, ev.kappa_at_freeze});
    doc["freeze_events"] = std::move(events);

    doc["final_kappa"] = rec.final_kappa;

    json params = json::array();
    for (const auto& p : rec.final_params) {
        switch (p.k) {
            case ansatz::gate_param::kind::angle:
                params.push_back({{"angle", p.v[0]}});
                break;
            case ansatz::gate_param::kind::axis:
                params.push_back({{"axis", {p.v[0], p.v[1], p.v[2]}}});
                break;
            default:
                params.push_back({{"quaternion", {p.v[0], p.v[1], p.v[2], p.v[3]}}});
        }
    }
    doc["final_params"] = std::move(params);
    doc["evals"] = {{"probes", rec.evals.probes}, {"confirmations", rec.evals.confirmations}};
    return doc.dump();
}

void cmd_run(const std::string& config_text, const std::vector<std::string>& overrides,
             const std::string& output_dir, int jobs) {
    const auto cfg = config::parse_config(config_text, overrides);
    if (cfg.freezing_enabled && cfg.thresholds.size() != 1)
        throw config_error("run needs exactly one entry in freezing.thresholds; use sweep for "
                           "threshold matrices");
    const std::string hash = config::config_hash(config_text, overrides);
    const double threshold = cfg.freezing_enabled ? cfg.thresholds.front() : 0.0;
    const harness::run_config base = cfg.build_run_config(threshold);

    std::vector<harness::run_record> records(cfg.run_count);
    {
        std::atomic<int> next{0};
        std::exception_ptr failure;
        std::mutex failure_mu;
        auto worker = [&] {
            for (int i = next.fetch_add(1); i < cfg.run_count; i = next.fetch_add(1)) {
                try {
                    harness::run_config rc = base;
                    rc.seed = cfg.seed + static_cast<std::uint64_t>(i);
                    records[i] = harness::run_optimization(rc);
                } catch (...) {
                    std::lock_guard lock(failure_mu);
                    if (!failure) failure = std::current_exception();
                }
            }
        };
        const int n_threads = std::clamp(jobs, 1, cfg.run_count);
        std::vector<std::thread> pool;
        for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }

    const std::string variant_name = cfg.freezing_enabled ? "frozen" : "baseline";
    const bool want_json = std::count(cfg.formats.begin(), cfg.formats.end(), "json") > 0;
    const bool want_csv = std::count(cfg.formats.begin(), cfg.formats.end(), "csv") > 0;

    output_stage stage{resolve_output_dir(output_dir, cfg.output_directory)};
    const auto spec = cfg.build_spec();
    if (want_json)
        for (int i = 0; i < cfg.run_count; ++i)
            stage.add(run_index_name(i),
                      run_record_to_json(records[i], cfg, variant_name, threshold, hash));
    if (want_csv) {
        stage.add("energies.csv", energies_csv(records));
        if (cfg.freezing_enabled) {
            std::ostringstream all_events;
            all_events << "run,sweep,slot,qubit,layer,distance,kappa_at_freeze\n";
            for (std::size_t r = 0; r < records.size(); ++r) {
                std::istringstream one(freeze_events_csv(records[r], spec));
                std::string line;
                std::getline(one, line);  // drop per-run header
                while (std::getline(one, line)) all_events << r << ',' << line << '\n';
            }
            stage.add("freeze_events.csv", all_events.str());
        }
    }
    stage.add("metadata.json", metadata_json(hash, cfg, "run").dump(2));
    stage.commit();
}

void cmd_sweep(const std::string& config_text, const std::vector<std::string>& overrides,
               const std::string& output_dir, int jobs) {
    const auto cfg = config::parse_config(config_text, overrides);
    if (!cfg.freezing_enabled)
        throw config_error("sweep needs freezing.enabled with a thresholds list");
    const std::string hash = config::config_hash(config_text, overrides);
    const harness::run_config base = cfg.build_run_config(cfg.thresholds.front());

    const std::vector<harness::freeze_mode_spec> modes{{cfg.mode, cfg.kappa}};
    const auto variants = harness::sweep_experiment(base, cfg.thresholds, modes, cfg.run_count, jobs);

    output_stage stage{resolve_output_dir(output_dir, cfg.output_directory)};
    std::ostringstream aggregate;
    aggregate << "variant,threshold,mode,kappa,seed,final_energy\n";
    std::ostringstream summary;
    summary << "variant,median,mean,q1,q3,whisker_low,whisker_high,outliers\n";
    for (const auto& variant : variants) {
        const bool frozen = variant.freeze.has_value();
        const double t = frozen ? variant.freeze->threshold : 0.0;
        std::vector<double> finals;
        for (int i = 0; i < static_cast<int>(variant.records.size()); ++i) {
            const auto& rec = variant.records[i];
            aggregate << variant.name << ',' << (frozen ? format_threshold(t) : "") << ','
                      << (frozen ? (variant.freeze->mode == freezing::freeze_mode::fixed
                                        ? "fixed"
                                        : "incremental")
                                 : "") << ','
                      << (frozen ? std::to_string(variant.freeze->kappa) : "") << ',' << rec.seed
                      << ',' << format_number(rec.final_energy) << '\n';
            finals.push_back(rec.final_energy);
            stage.add("records/" + variant.name + "/" + run_index_name(i),
                      run_record_to_json(rec, cfg, variant.name, t, hash));
        }
        const auto stats = harness::compute_box_stats(finals);
        summary << variant.name << ',' << format_number(stats.median) << ','
                << format_number(stats.mean) << ',' << format_number(stats.q1) << ','
                << format_number(stats.q3) << ',' << format_number(stats.whisker_low) << ','
                << format_number(stats.whisker_high) << ',' << stats.outliers.size() << '\n';
    }
    stage.add("aggregate.csv", aggregate.str());
    stage.add("summary.csv", summary.str());
    stage.add("metadata.json", metadata_json(hash, cfg, "sweep").dump(2));
    stage.commit();
}

double cmd_exact(const std::string& config_text, const std::vector<std::string>& overrides) {
    const auto cfg = config::parse_config(config_text, overrides);
    return hamiltonians::exact_ground_energy(cfg.build_hamiltonian());
}

void cmd_heatmap(const std::string& records_dir, const std::string& output_dir) {
    std::vector<fs::path> files;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(records_dir, ec)) {
        const auto name = entry.path().filename().string();
        if (entry.is_regular_file() && name.starts_with("run_") && name.ends_with(".json"))
            files.push_back(entry.path());
    }
    if (ec) throw config_error("cannot read records directory: " + records_dir);
    if (files.empty()) throw config_error("no run_*.json records in: " + records_dir);
    std::sort(files.begin(), files.end());

    json first_ansatz;
    std::string first_optimizer;
    // threshold text -> per-record final kappa vectors
    std::map<std::string, std::vector<std::vector<int>>> by_threshold;
    ansatz::ansatz_spec spec;
    for (const auto& path : files) {
        std::ifstream in(path);
        json doc = json::parse(in, nullptr, false);
        if (doc.is_discarded() || !doc.contains("ansatz") || !doc.contains("final_kappa"))
            throw config_error("not a run record: " + path.string());
        if (first_ansatz.is_null()) {
            first_ansatz = doc["ansatz"];
            first_optimizer = doc.value("optimizer", "");
            spec = ansatz::build_ansatz(
                ansatz::family_from_string(first_ansatz.at("family").get<std::string>()),
                first_ansatz.at("n_qubits").get<int>(), first_ansatz.at("layers").get<int>());
        } else if (doc["ansatz"] != first_ansatz || doc.value("optimizer", "") != first_optimizer) {
            throw config_error("records mix different specs: " + path.string());
        }
        const json& fr = doc.at("freezing");
        const std::string t = fr.value("enabled", false)
                                  ? format_threshold(fr.at("threshold").get<double>())
                                  : std::string("none");
        by_threshold[t].push_back(doc.at("final_kappa").get<std::vector<int>>());
    }

    output_stage stage{resolve_output_dir(output_dir, "")};
    for (const auto& [t, kappas] : by_threshold) {
        std::vector<harness::run_record> recs(kappas.size());
        for (std::size_t i = 0; i < kappas.size(); ++i) recs[i].final_kappa = kappas[i];
        stage.add("heatmap_T" + t + ".csv", heatmap_csv(harness::kappa_heatmap(recs, spec)));
    }
    stage.commit();
}

void cmd_mutual_info(const std::string& config_text, const std::vector<std::string>& overrides,
                     const std::string& output_dir) {
    const auto cfg = config::parse_config(config_text, overrides);
    const std::string hash = config::config_hash(config_text, overrides);
    const auto spec = cfg.build_spec();
    const auto mi = harness::mutual_information_experiment(spec, cfg.optimizer, cfg.mi_samples,
                                                           cfg.seed);
    output_stage stage{resolve_output_dir(output_dir, cfg.output_directory)};
    std::ostringstream csv;
    csv << "qubit";
    for (int q = 0; q < spec.n_qubits; ++q) csv << ",q" << q;
    csv << '\n';
    for (int i = 0; i < spec.n_qubits; ++i) {
        csv << i;
        for (int j = 0; j < spec.n_qubits; ++j) csv << ',' << format_number(mi[i][j]);
        csv << '\n';
    }
    stage.add("mutual_info.csv", csv.str());
    json meta = metadata_json(hash, cfg, "mutual-info");
    meta["samples"] = cfg.mi_samples;
    stage.add("metadata.json", meta.dump(2));
    stage.commit();
}

}  // namespace fq::experiments
