#pragma once

#include <cstdint>
#include <vector>

#include "ansatz.hpp"

namespace fq::freezing {

using ansatz::gate_param;
using simcore::cplx;
using simcore::gate2x2;

// Wrapped angular distance on (-pi, pi], range [0, pi].
double angle_distance(double prev, double next);

// Great-circle distance on the unit 3-sphere with the antipodal identification
// U == -U, range [0, pi/2]. Fraxis axes embed as (0, nx, ny, nz).
double quaternion_distance(const std::array<double, 4>& prev, const std::array<double, 4>& next);

// Normalized, global-phase-invariant Frobenius distance between 2x2 unitaries,
// range [0, 1].
double unitary_distance(const gate2x2& prev, const gate2x2& next);

// Same distance for 2^k x 2^k unitaries (row major), normalized by its maximal
// value sqrt(2^(k+1)).
double unitary_distance_nqubit(const std::vector<cplx>& prev, const std::vector<cplx>& next);

enum class freeze_metric { parameter, unitary_norm };
enum class freeze_mode { fixed, incremental };

freeze_metric metric_from_string(const std::string& name);
std::string metric_to_string(freeze_metric m);

struct freeze_config {
    double threshold = 0.0;  // T
    freeze_mode mode = freeze_mode::fixed;
    int kappa = 1;  // fixed mode only
    freeze_metric metric = freeze_metric::parameter;
};

// Distance between consecutive parameters of one slot under the configured
// metric. `gen` resolves the rotation generator for angle parameters.
double param_distance(const gate_param& prev, const gate_param& next,
                      ansatz::generator_kind gen, freeze_metric metric);

struct freeze_event {
    int sweep = 0;
    int slot = 0;
    double distance = 0.0;
    int kappa_at_freeze = 0;
};

struct freeze_state {
    std::vector<int> frozen_remaining;  // sweeps left frozen, per slot
    std::vector<int> kappa;             // per-slot kappa vector
    std::vector<freeze_event> event_log;

    explicit freeze_state(int n_slots, const freeze_config& config);

    bool should_optimize(int slot) const;
    // Call after slot's update with the measured distance; freezes the slot
    // when distance < T, incrementing its kappa in incremental mode.
    void record_update(int slot, double distance, const freeze_config& config, int sweep);
    // Call at the end of each full sweep: decrements positive counters.
    void sweep_tick();
};

}  // namespace fq::freezing
