#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "freezing.hpp"
#include "hamiltonians.hpp"
#include "optimizers.hpp"

namespace fq::harness {

using ansatz::ansatz_spec;
using ansatz::param_vector;
using freezing::freeze_config;
using optimizers::eval_counter;
using optimizers::optimizer_kind;
using simcore::pauli_sum;
using simcore::state_vector;

struct run_config {
    pauli_sum hamiltonian;
    ansatz_spec spec;
    optimizer_kind optimizer = optimizer_kind::rotosolve;
    std::optional<freeze_config> freeze;
    long budget = 0;  // total gate optimizations
    std::uint64_t seed = 0;
};

struct update_record {
    int slot = 0;
    double energy = 0.0;    // confirmed energy after this update
    double distance = 0.0;  // metric distance between old and new parameter
};

struct sweep_summary {
    int updates = 0;         // gate optimizations performed this sweep
    int frozen_skipped = 0;  // slots skipped because frozen
    double exceed_pct = -1;  // % of slots exceeding T; -1 when freezing is off
};

struct run_record {
    std::uint64_t seed = 0;
    long budget = 0;
    double initial_energy = 0.0;
    double final_energy = 0.0;
    std::vector<update_record> updates;  // exactly `budget` entries
    std::vector<sweep_summary> sweeps;
    std::vector<freezing::freeze_event> freeze_events;
    std::vector<int> final_kappa;  // per slot
    param_vector final_params;
    eval_counter evals;
};

// Deterministic per-seed initialization: angles uniform on (-pi, pi], axes
// uniform on S^2, quaternions uniform on S^3.
param_vector init_params(const ansatz_spec& spec, optimizer_kind optimizer, std::uint64_t seed);

run_record run_optimization(const run_config& config);

struct freeze_mode_spec {
    freezing::freeze_mode mode = freezing::freeze_mode::fixed;
    int kappa = 1;  // ignored in incremental mode

    std::string name() const;
};

struct sweep_variant {
    std::string name;  // "baseline" or "<mode>_T<threshold>"
    std::optional<freeze_config> freeze;
    std::vector<run_record> records;  // one per seed, seeds seed0..seed0+n_runs-1
};

// Baseline plus every (threshold x mode) variant, n_runs seeded runs each.
// Seeds are shared across variants so initializations match.
std::vector<sweep_variant> sweep_experiment(const run_config& base,
                                            const std::vector<double>& thresholds,
                                            const std::vector<freeze_mode_spec>& modes,
                                            int n_runs, int jobs = 1);

struct box_stats {
    double median = 0, mean = 0, q1 = 0, q3 = 0;
    double whisker_low = 0, whisker_high = 0;
    std::vector<double> outliers;
};

box_stats compute_box_stats(std::vector<double> values);

// Mean final kappa per (qubit, parameter-layer) cell over the given records.
std::vector<std::vector<double>> kappa_heatmap(const std::vector<run_record>& records,
                                               const ansatz_spec& spec);

// Per-sweep percentage of slots whose last distance exceeded T.
std::vector<double> freeze_proportion_trace(const run_record& record);

struct scalability_row {
    int n_qubits = 0;
    std::string variant;
    std::uint64_t seed = 0;
    double final_energy = 0;
    double ground_energy = 0;
    double abs_error = 0;
    double rel_error = 0;
};

// Heisenberg J=h=1 with L=n, baseline vs incremental freezing per threshold.
std::vector<scalability_row> scalability_experiment(const std::vector<int>& n_list,
                                                    optimizer_kind optimizer,
                                                    const std::vector<double>& thresholds,
                                                    int n_runs, int iterations,
                                                    std::uint64_t seed, int jobs = 1);

// Pairwise mutual information in bits; diagonal zero.
std::vector<std::vector<double>> mutual_information_matrix(const state_vector& state);

std::vector<std::vector<double>> mutual_information_experiment(const ansatz_spec& spec,
                                                               optimizer_kind param_style,
                                                               int n_samples,
                                                               std::uint64_t seed);

}  // namespace fq::harness
