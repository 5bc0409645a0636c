#pragma once

#include <array>
#include <string>
#include <vector>

#include "simcore.hpp"

namespace fq::ansatz {

using simcore::gate2x2;
using simcore::pauli_sum;
using simcore::state_vector;

// Per-gate parameter: rotation angle, pi-rotation axis, or full quaternion.
struct gate_param {
    enum class kind { angle, axis, quaternion };

    kind k = kind::angle;
    std::array<double, 4> v{};  // angle in v[0]; axis in v[0..2]; quaternion in v[0..3]

    static gate_param make_angle(double theta);
    static gate_param make_axis(double nx, double ny, double nz);
    static gate_param make_quaternion(double q0, double q1, double q2, double q3);

    double angle() const { return v[0]; }
};

// Canonical angle in (-pi, pi].
double wrap_angle(double theta);

enum class generator_kind { pauli_x, pauli_y, free_gate };

struct gate_slot {
    int qubit = 0;
    int param_layer = 0;  // column in the sweep order (2L columns for roto families)
    generator_kind gen = generator_kind::free_gate;
};

enum class entangler_kind { cz, cnot };

struct entangler_gate {
    entangler_kind kind = entangler_kind::cz;
    int control = 0;
    int target = 1;
};

enum class family {
    a_roto,  // X,Y rotation pairs, CZ chain
    a_free,  // free gates, CZ chain
    b1, b2,  // cascade CNOT entangler
    c1, c2,  // cyclic CNOT entangler
    d1, d2,  // one-qubit-connector (star) CNOT entangler
};

family family_from_string(const std::string& name);
std::string family_to_string(family f);
bool family_is_roto(family f);

struct ansatz_spec {
    int n_qubits = 0;
    int n_layers = 0;
    family fam = family::a_roto;
    std::vector<gate_slot> slots;  // sweep order: down each column, then next column
    std::vector<std::vector<entangler_gate>> entanglers;  // one list per circuit layer

    int slot_count() const { return static_cast<int>(slots.size()); }
    int param_layer_count() const;  // 2L for roto families, L otherwise
    int slots_per_circuit_layer() const;
};

ansatz_spec build_ansatz(family fam, int n_qubits, int n_layers);

using param_vector = std::vector<gate_param>;

// Single-qubit unitary for one parameter. `gen` selects the rotation
// generator for angle parameters and is ignored otherwise.
gate2x2 gate_unitary(const gate_param& p, generator_kind gen);

void check_params(const ansatz_spec& spec, const param_vector& params);

state_vector run_circuit(const ansatz_spec& spec, const param_vector& params);

// Same circuit with the unitary at slot `substitute_slot` replaced. The probe
// primitive behind every sequential optimizer step.
state_vector run_circuit_substituted(const ansatz_spec& spec, const param_vector& params,
                                     int substitute_slot, const gate2x2& replacement);

double evaluate_energy(const ansatz_spec& spec, const param_vector& params, const pauli_sum& obs);

}  // namespace fq::ansatz
