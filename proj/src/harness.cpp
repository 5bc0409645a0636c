#include "harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <random>
#include <thread>

namespace fq::harness {

using ansatz::gate_param;
using ansatz::generator_kind;
using freezing::freeze_mode;
using freezing::freeze_state;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

gate_param sample_param(generator_kind gen, optimizer_kind optimizer, std::mt19937_64& rng) {
    if (gen != generator_kind::free_gate) {
        std::uniform_real_distribution<double> uni(-kPi, kPi);  // [-pi, pi)
        return gate_param::make_angle(ansatz::wrap_angle(-uni(rng)));
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    if (optimizer == optimizer_kind::fraxis) {
        double n[3], norm = 0.0;
        do {
            norm = 0.0;
            for (double& x : n) norm += (x = gauss(rng)) * x;
        } while (norm < 1e-12);
        norm = std::sqrt(norm);
        return gate_param::make_axis(n[0] / norm, n[1] / norm, n[2] / norm);
    }
    double q[4], norm = 0.0;
    do {
        norm = 0.0;
        for (double& x : q) norm += (x = gauss(rng)) * x;
    } while (norm < 1e-12);
    norm = std::sqrt(norm);
    return gate_param::make_quaternion(q[0] / norm, q[1] / norm, q[2] / norm, q[3] / norm);
}

// Run the given closures over [0, count) on up to `jobs` threads.
template <typename Fn>
void parallel_for(int count, int jobs, Fn&& fn) {
    jobs = std::max(1, std::min(jobs, count));
    if (jobs == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int t = 0; t < jobs; ++t) {
        workers.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& w : workers) w.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

param_vector init_params(const ansatz_spec& spec, optimizer_kind optimizer, std::uint64_t seed) {
    std::mt19937_64 rng(splitmix64(seed));
    param_vector params;
    params.reserve(spec.slots.size());
    for (const auto& slot : spec.slots) params.push_back(sample_param(slot.gen, optimizer, rng));
    return params;
}

run_record run_optimization(const run_config& config) {
    if (config.budget < 1) throw config_error("budget must be >= 1");
    if (config.budget < config.spec.slot_count())
        throw config_error("budget must cover at least one full sweep");
    if (config.hamiltonian.n_qubits != config.spec.n_qubits)
        throw argument_error("hamiltonian width does not match ansatz width");

    run_record rec;
    rec.seed = config.seed;
    rec.budget = config.budget;
    rec.updates.reserve(config.budget);

    param_vector params = init_params(config.spec, config.optimizer, config.seed);
    rec.initial_energy = ansatz::evaluate_energy(config.spec, params, config.hamiltonian);

    const int n_slots = config.spec.slot_count();
    const freeze_config fc = config.freeze.value_or(freeze_config{});
    freeze_state fstate(n_slots, fc);
    const bool freezing_on = config.freeze.has_value();

    long performed = 0;
    int sweep = 0;
    while (performed < config.budget) {
        sweep_summary summary;
        int exceed_count = 0;
        for (int slot = 0; slot < n_slots && performed < config.budget; ++slot) {
            if (freezing_on && !fstate.should_optimize(slot)) {
                ++summary.frozen_skipped;
                continue;
            }
            optimizers::gate_eval_context ctx{config.spec, params, slot, config.hamiltonian,
                                              &rec.evals};
            const gate_param prev = params[slot];
            const auto step = optimizers::optimize_gate(ctx);
            params[slot] = step.param;
            const double distance = freezing::param_distance(
                prev, step.param, config.spec.slots[slot].gen, fc.metric);
            rec.updates.push_back({slot, step.energy, distance});
            ++performed;
            ++summary.updates;
            if (freezing_on) {
                if (distance >= fc.threshold) ++exceed_count;
                fstate.record_update(slot, distance, fc, sweep);
            }
        }
        if (freezing_on) summary.exceed_pct = 100.0 * exceed_count / n_slots;
        rec.sweeps.push_back(summary);
        fstate.sweep_tick();
        ++sweep;
    }

    rec.final_params = std::move(params);
    rec.final_kappa = fstate.kappa;
    rec.freeze_events = std::move(fstate.event_log);
    rec.final_energy = rec.updates.back().energy;
    return rec;
}

std::string freeze_mode_spec::name() const {
    if (mode == freeze_mode::incremental) return "incremental";
    return "fixed_k" + std::to_string(kappa);
}

namespace {
std::string format_threshold(double t) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", t);
    return buf;
}
}  // namespace

std::vector<sweep_variant> sweep_experiment(const run_config& base,
                                            const std::vector<double>& thresholds,
                                            const std::vector<freeze_mode_spec>& modes,
                                            int n_runs, int jobs) {
    if (n_runs < 1) throw config_error("sweep needs at least one run");
    std::vector<sweep_variant> variants;
    variants.push_back({"baseline", std::nullopt, {}});
    const freeze_config base_fc = base.freeze.value_or(freeze_config{});
    for (const auto& mode : modes) {
        for (double t : thresholds) {
            freeze_config fc = base_fc;
            fc.threshold = t;
            fc.mode = mode.mode;
            fc.kappa = mode.kappa;
            variants.push_back({mode.name() + "_T" + format_threshold(t), fc, {}});
        }
    }
    for (auto& variant : variants) {
        variant.records.resize(n_runs);
        parallel_for(n_runs, jobs, [&](int run) {
            run_config config = base;
            config.freeze = variant.freeze;
            config.seed = base.seed + static_cast<std::uint64_t>(run);
            variant.records[run] = run_optimization(config);
        });
    }
    return variants;
}

box_stats compute_box_stats(std::vector<double> values) {
    if (values.empty()) throw argument_error("box stats need at least one value");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    auto quantile = [&](double p) {
        const double pos = p * static_cast<double>(n - 1);
        const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
        const std::size_t hi = static_cast<std::size_t>(std::ceil(pos));
        const double frac = pos - static_cast<double>(lo);
        return values[lo] + frac * (values[hi] - values[lo]);
    };
    box_stats stats;
    stats.q1 = quantile(0.25);
    stats.median = quantile(0.5);
    stats.q3 = quantile(0.75);
    stats.mean = 0.0;
    for (double v : values) stats.mean += v;
    stats.mean /= static_cast<double>(n);
    const double iqr = stats.q3 - stats.q1;
    const double low_fence = stats.q1 - 1.5 * iqr;
    const double high_fence = stats.q3 + 1.5 * iqr;
    stats.whisker_low = stats.q3;
    stats.whisker_high = stats.q1;
    for (double v : values) {
        if (v < low_fence || v > high_fence) {
            stats.outliers.push_back(v);
        } else {
            stats.whisker_low = std::min(stats.whisker_low, v);
            stats.whisker_high = std::max(stats.whisker_high, v);
        }
    }
    return stats;
}

std::vector<std::vector<double>> kappa_heatmap(const std::vector<run_record>& records,
                                               const ansatz_spec& spec) {
    if (records.empty()) throw argument_error("heatmap needs at least one record");
    for (const auto& rec : records)
        if (static_cast<int>(rec.final_kappa.size()) != spec.slot_count())
            throw argument_error("record does not match the given ansatz spec");
    std::vector<std::vector<double>> grid(
        spec.n_qubits, std::vector<double>(spec.param_layer_count(), 0.0));
    for (const auto& rec : records)
        for (int s = 0; s < spec.slot_count(); ++s)
            grid[spec.slots[s].qubit][spec.slots[s].param_layer] += rec.final_kappa[s];
    for (auto& row : grid)
        for (double& cell : row) cell /= static_cast<double>(records.size());
    return grid;
}

std::vector<double> freeze_proportion_trace(const run_record& record) {
    std::vector<double> trace;
    trace.reserve(record.sweeps.size());
    for (const auto& s : record.sweeps) {
        if (s.exceed_pct < 0.0) throw argument_error("run was executed without freezing");
        trace.push_back(s.exceed_pct);
    }
    return trace;
}

std::vector<scalability_row> scalability_experiment(const std::vector<int>& n_list,
                                                    optimizer_kind optimizer,
                                                    const std::vector<double>& thresholds,
                                                    int n_runs, int iterations,
                                                    std::uint64_t seed, int jobs) {
    std::vector<scalability_row> rows;
    for (int n : n_list) {
        if (n > hamiltonians::kOracleMaxQubits)
            throw resource_error("scalability sweep exceeds the oracle width cap");
        run_config base;
        base.hamiltonian = hamiltonians::heisenberg_1d({n, 1.0, 1.0});
        const auto fam = optimizer == optimizer_kind::rotosolve ? ansatz::family::a_roto
                                                                : ansatz::family::a_free;
        base.spec = ansatz::build_ansatz(fam, n, n);  // L = n
        base.optimizer = optimizer;
        base.budget = static_cast<long>(iterations) * base.spec.slot_count();
        base.seed = seed;
        freeze_config fc;
        fc.mode = freeze_mode::incremental;
        fc.metric = freezing::freeze_metric::parameter;
        base.freeze = fc;

        const double ground = hamiltonians::exact_ground_energy(base.hamiltonian);
        const auto variants = sweep_experiment(base, thresholds,
                                               {{freeze_mode::incremental, 1}}, n_runs, jobs);
        for (const auto& variant : variants) {
            for (const auto& rec : variant.records) {
                scalability_row row;
                row.n_qubits = n;
                row.variant = variant.name;
                row.seed = rec.seed;
                row.final_energy = rec.final_energy;
                row.ground_energy = ground;
                row.abs_error = std::abs(rec.final_energy - ground);
                row.rel_error = row.abs_error / std::abs(ground);
                rows.push_back(row);
            }
        }
    }
    return rows;
}

std::vector<std::vector<double>> mutual_information_matrix(const state_vector& state) {
    const int n = state.n_qubits();
    if (n < 2) throw argument_error("mutual information needs at least 2 qubits");
    std::vector<double> single(n);
    for (int q = 0; q < n; ++q)
        single[q] = simcore::von_neumann_entropy(simcore::reduced_density_matrix(state, {q}));
    std::vector<std::vector<double>> mi(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double joint =
                simcore::von_neumann_entropy(simcore::reduced_density_matrix(state, {i, j}));
            mi[i][j] = mi[j][i] = single[i] + single[j] - joint;
        }
    }
    return mi;
}

std::vector<std::vector<double>> mutual_information_experiment(const ansatz_spec& spec,
                                                               optimizer_kind param_style,
                                                               int n_samples,
                                                               std::uint64_t seed) {
    if (n_samples < 1) throw config_error("mutual information experiment needs samples >= 1");
    const int n = spec.n_qubits;
    std::vector<std::vector<double>> avg(n, std::vector<double>(n, 0.0));
    for (int s = 0; s < n_samples; ++s) {
        const auto params = init_params(spec, param_style, seed + static_cast<std::uint64_t>(s));
        const auto state = ansatz::run_circuit(spec, params);
        const auto mi = mutual_information_matrix(state);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) avg[i][j] += mi[i][j];
    }
    for (auto& row : avg)
        for (double& cell : row) cell /= static_cast<double>(n_samples);
    return avg;
}

}  // namespace fq::harness
