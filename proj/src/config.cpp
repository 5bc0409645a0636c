#include "config.hpp"

#include <json.hpp>

#include <set>

namespace fq::config {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw config_error("config is not valid JSON");
    if (!doc.is_object()) throw config_error("config must be a JSON object");
    return doc;
}

void reject_unknown(const json& obj, const std::string& section,
                    const std::set<std::string>& allowed) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!allowed.count(key))
            throw config_error("unknown config key: " +
                               (section.empty() ? key : section + "." + key));
    }
}

template <typename T>
T get_required(const json& obj, const std::string& section, const std::string& key) {
    if (!obj.contains(key)) throw config_error("missing config key: " + section + "." + key);
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw config_error("invalid value for config key: " + section + "." + key);
    }
}

template <typename T>
T get_optional(const json& obj, const std::string& section, const std::string& key, T fallback) {
    if (!obj.contains(key)) return fallback;
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw config_error("invalid value for config key: " + section + "." + key);
    }
}

// Apply "section.key=value" to the document. Values parse as JSON when
// possible, otherwise as a plain string.
void apply_override(json& doc, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw config_error("override must have the form section.key=value: " + assignment);
    const std::string path = assignment.substr(0, eq);
    const std::string value_text = assignment.substr(eq + 1);
    const auto dot = path.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == path.size())
        throw config_error("override must have the form section.key=value: " + assignment);
    const std::string section = path.substr(0, dot);
    const std::string key = path.substr(dot + 1);

    json value = json::parse(value_text, nullptr, false);
    if (value.is_discarded()) value = value_text;
    if (!doc.contains(section) || !doc[section].is_object()) doc[section] = json::object();
    doc[section][key] = value;
}

json canonical_document(const std::string& json_text, const std::vector<std::string>& overrides) {
    json doc = parse_json(json_text);
    for (const auto& ov : overrides) apply_override(doc, ov);
    return doc;
}

experiment_config from_document(const json& doc) {
    reject_unknown(doc, "", {"hamiltonian", "ansatz", "optimizer", "freezing", "runs", "output",
                             "mutual_info"});
    experiment_config cfg;

    if (!doc.contains("hamiltonian")) throw config_error("missing config section: hamiltonian");
    const json& ham = doc.at("hamiltonian");
    reject_unknown(ham, "hamiltonian", {"kind", "n_sites", "J", "h", "t", "U"});
    cfg.hamiltonian_kind = get_required<std::string>(ham, "hamiltonian", "kind");
    if (cfg.hamiltonian_kind == "heisenberg") {
        cfg.n_sites = get_required<int>(ham, "hamiltonian", "n_sites");
        cfg.j = get_optional<double>(ham, "hamiltonian", "J", 1.0);
        cfg.h = get_optional<double>(ham, "hamiltonian", "h", 1.0);
        if (ham.contains("t") || ham.contains("U"))
            throw config_error("unknown config key: hamiltonian.t/U for heisenberg");
    } else if (cfg.hamiltonian_kind == "hubbard") {
        cfg.n_sites = get_required<int>(ham, "hamiltonian", "n_sites");
        cfg.t = get_optional<double>(ham, "hamiltonian", "t", 0.5);
        cfg.u = get_optional<double>(ham, "hamiltonian", "U", 0.5);
        if (ham.contains("J") || ham.contains("h"))
            throw config_error("unknown config key: hamiltonian.J/h for hubbard");
    } else {
        throw config_error("invalid value for config key: hamiltonian.kind");
    }

    if (!doc.contains("ansatz")) throw config_error("missing config section: ansatz");
    const json& ans = doc.at("ansatz");
    reject_unknown(ans, "ansatz", {"family", "layers"});
    cfg.family = ansatz::family_from_string(get_required<std::string>(ans, "ansatz", "family"));
    cfg.layers = get_required<int>(ans, "ansatz", "layers");

    if (!doc.contains("optimizer")) throw config_error("missing config section: optimizer");
    const json& opt = doc.at("optimizer");
    reject_unknown(opt, "optimizer", {"kind"});
    cfg.optimizer =
        optimizers::optimizer_from_string(get_required<std::string>(opt, "optimizer", "kind"));

    if (doc.contains("freezing")) {
        const json& fr = doc.at("freezing");
        reject_unknown(fr, "freezing", {"enabled", "metric", "mode", "kappa", "thresholds"});
        cfg.freezing_enabled = get_optional<bool>(fr, "freezing", "enabled", true);
        cfg.metric = freezing::metric_from_string(
            get_optional<std::string>(fr, "freezing", "metric", "parameter"));
        const std::string mode = get_optional<std::string>(fr, "freezing", "mode", "fixed");
        if (mode == "fixed") cfg.mode = freezing::freeze_mode::fixed;
        else if (mode == "incremental") cfg.mode = freezing::freeze_mode::incremental;
        else throw config_error("invalid value for config key: freezing.mode");
        cfg.kappa = get_optional<int>(fr, "freezing", "kappa", 1);
        cfg.thresholds = get_optional<std::vector<double>>(fr, "freezing", "thresholds", {});
        if (cfg.freezing_enabled && cfg.thresholds.empty())
            throw config_error("missing config key: freezing.thresholds");
        for (double t : cfg.thresholds)
            if (!(t >= 0.0)) throw config_error("invalid value for config key: freezing.thresholds");
        if (cfg.mode == freezing::freeze_mode::fixed && cfg.kappa < 1)
            throw config_error("invalid value for config key: freezing.kappa");
    }

    if (!doc.contains("runs")) throw config_error("missing config section: runs");
    const json& runs = doc.at("runs");
    reject_unknown(runs, "runs", {"count", "seed", "iterations"});
    cfg.run_count = get_optional<int>(runs, "runs", "count", 1);
    cfg.seed = get_optional<std::uint64_t>(runs, "runs", "seed", 0);
    cfg.iterations = get_optional<int>(runs, "runs", "iterations", 50);
    if (cfg.run_count < 1) throw config_error("invalid value for config key: runs.count");
    if (cfg.iterations < 1) throw config_error("invalid value for config key: runs.iterations");

    if (doc.contains("output")) {
        const json& out = doc.at("output");
        reject_unknown(out, "output", {"directory", "formats"});
        cfg.output_directory = get_optional<std::string>(out, "output", "directory", "");
        cfg.formats = get_optional<std::vector<std::string>>(out, "output", "formats",
                                                             {"json", "csv"});
        for (const auto& f : cfg.formats)
            if (f != "json" && f != "csv")
                throw config_error("invalid value for config key: output.formats");
    }

    if (doc.contains("mutual_info")) {
        const json& mi = doc.at("mutual_info");
        reject_unknown(mi, "mutual_info", {"samples"});
        cfg.mi_samples = get_optional<int>(mi, "mutual_info", "samples", 1000);
        if (cfg.mi_samples < 1) throw config_error("invalid value for config key: mutual_info.samples");
    }

    // Cross-field validation.
    const bool roto_family = ansatz::family_is_roto(cfg.family);
    const bool roto_optimizer = cfg.optimizer == optimizers::optimizer_kind::rotosolve;
    if (roto_family != roto_optimizer)
        throw config_error("ansatz.family does not match optimizer.kind (rotosolve needs "
                           "A_roto/B1/C1/D1, fraxis/fqs need A_free/B2/C2/D2)");
    return cfg;
}

}  // namespace

int experiment_config::n_qubits() const {
    return hamiltonian_kind == "hubbard" ? 2 * n_sites : n_sites;
}

simcore::pauli_sum experiment_config::build_hamiltonian() const {
    if (hamiltonian_kind == "hubbard")
        return hamiltonians::fermi_hubbard_chain({n_sites, t, u});
    return hamiltonians::heisenberg_1d({n_sites, j, h});
}

ansatz::ansatz_spec experiment_config::build_spec() const {
    return ansatz::build_ansatz(family, n_qubits(), layers);
}

harness::run_config experiment_config::build_run_config(double threshold_override) const {
    harness::run_config rc;
    rc.hamiltonian = build_hamiltonian();
    rc.spec = build_spec();
    rc.optimizer = optimizer;
    rc.budget = static_cast<long>(iterations) * rc.spec.slot_count();
    rc.seed = seed;
    if (freezing_enabled) {
        freezing::freeze_config fc;
        fc.metric = metric;
        fc.mode = mode;
        fc.kappa = kappa;
        fc.threshold = threshold_override >= 0.0 ? threshold_override : thresholds.front();
        rc.freeze = fc;
    }
    return rc;
}

experiment_config parse_config(const std::string& json_text,
                               const std::vector<std::string>& overrides) {
    return from_document(canonical_document(json_text, overrides));
}

std::string config_hash(const std::string& json_text, const std::vector<std::string>& overrides) {
    const std::string canon = canonical_document(json_text, overrides).dump();
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : canon) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

}  // namespace fq::config
