#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "harness.hpp"

namespace fq::config {

// Parsed experiment configuration file. Unknown keys are rejected with a
// diagnostic naming the offending key.
struct experiment_config {
    // hamiltonian
    std::string hamiltonian_kind;  // "heisenberg" | "hubbard"
    int n_sites = 0;
    double j = 1.0, h = 1.0;  // heisenberg
    double t = 0.5, u = 0.5;  // hubbard

    // ansatz
    ansatz::family family = ansatz::family::a_roto;
    int layers = 1;

    // optimizer
    optimizers::optimizer_kind optimizer = optimizers::optimizer_kind::rotosolve;

    // freezing
    bool freezing_enabled = false;
    freezing::freeze_metric metric = freezing::freeze_metric::parameter;
    freezing::freeze_mode mode = freezing::freeze_mode::fixed;
    int kappa = 1;
    std::vector<double> thresholds;

    // runs
    int run_count = 1;
    std::uint64_t seed = 0;
    int iterations = 50;

    // output
    std::string output_directory;
    std::vector<std::string> formats{"json", "csv"};

    // mutual_info (optional section)
    int mi_samples = 1000;

    int n_qubits() const;
    simcore::pauli_sum build_hamiltonian() const;
    ansatz::ansatz_spec build_spec() const;
    harness::run_config build_run_config(double threshold_override = -1.0) const;
};

// Parse, validate, and apply "section.key=value" overrides. Throws
// config_error naming the offending key.
experiment_config parse_config(const std::string& json_text,
                               const std::vector<std::string>& overrides = {});

// FNV-1a hash of the canonicalized config document, as fixed-width hex.
std::string config_hash(const std::string& json_text,
                        const std::vector<std::string>& overrides = {});

}  // namespace fq::config
