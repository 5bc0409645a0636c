#pragma once

#include <vector>

#include "ansatz.hpp"

namespace fq::optimizers {

using ansatz::ansatz_spec;
using ansatz::gate_param;
using ansatz::param_vector;
using simcore::pauli_sum;

enum class optimizer_kind { rotosolve, fraxis, fqs };

optimizer_kind optimizer_from_string(const std::string& name);
std::string optimizer_to_string(optimizer_kind k);

// Circuit evaluations performed, probes and confirmations counted apart.
struct eval_counter {
    long probes = 0;
    long confirmations = 0;
};

struct gate_eval_context {
    const ansatz_spec& spec;
    param_vector& params;
    int slot = 0;
    const pauli_sum& obs;
    eval_counter* counter = nullptr;  // optional
};

// One circuit evaluation with the context slot's unitary replaced.
double probe_energy(const gate_eval_context& ctx, const simcore::gate2x2& replacement);

struct step_result {
    gate_param param;
    double energy = 0.0;  // confirmed energy at the new parameter
};

struct fraxis_moments {
    double r_x = 0, r_y = 0, r_z = 0;
    double r_xy = 0, r_xz = 0, r_yz = 0;
};

// k x k real symmetric matrix, row major, k small.
struct sym_matrix {
    int k = 0;
    std::vector<double> a;

    double at(int r, int c) const { return a[r * k + c]; }
    double& at(int r, int c) { return a[r * k + c]; }
};

struct eigen_pair {
    double value = 0.0;
    std::vector<double> vector;
};

// Cyclic Jacobi sweeps until the off-diagonal Frobenius mass is below 1e-14.
// Returns the minimal eigenpair; the eigenvector's first component of
// magnitude > 1e-8 is made positive.
eigen_pair symmetric_eigen_lowest(const sym_matrix& matrix);

// Closed-form angle update from probes at theta = 0, pi/2, -pi/2.
step_result rotosolve_step(const gate_eval_context& ctx);

fraxis_moments measure_fraxis_moments(const gate_eval_context& ctx);
sym_matrix fraxis_matrix(const fraxis_moments& m);
step_result fraxis_step(const gate_eval_context& ctx);

sym_matrix fqs_smatrix(const gate_eval_context& ctx);
step_result fqs_step(const gate_eval_context& ctx);

// Dispatch on the slot's parameter variant.
step_result optimize_gate(const gate_eval_context& ctx);

}  // namespace fq::optimizers
