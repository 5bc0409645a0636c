#include "ansatz.hpp"

#include <cmath>

namespace fq::ansatz {

using simcore::cplx;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr cplx kI{0.0, 1.0};

void check_unit(const double* v, int len) {
    double s = 0.0;
    for (int i = 0; i < len; ++i) s += v[i] * v[i];
    if (std::abs(s - 1.0) >= 1e-10)
        throw argument_error("gate parameter vector is not normalized");
}
}  // namespace

double wrap_angle(double theta) {
    double w = std::remainder(theta, 2.0 * kPi);  // [-pi, pi]
    if (w <= -kPi) w = kPi;
    return w;
}

gate_param gate_param::make_angle(double theta) {
    gate_param p;
    p.k = kind::angle;
    p.v[0] = wrap_angle(theta);
    return p;
}

gate_param gate_param::make_axis(double nx, double ny, double nz) {
    gate_param p;
    p.k = kind::axis;
    p.v = {nx, ny, nz, 0.0};
    check_unit(p.v.data(), 3);
    return p;
}

gate_param gate_param::make_quaternion(double q0, double q1, double q2, double q3) {
    gate_param p;
    p.k = kind::quaternion;
    p.v = {q0, q1, q2, q3};
    check_unit(p.v.data(), 4);
    return p;
}

family family_from_string(const std::string& name) {
    if (name == "A_roto") return family::a_roto;
    if (name == "A_free") return family::a_free;
    if (name == "B1") return family::b1;
    if (name == "B2") return family::b2;
    if (name == "C1") return family::c1;
    if (name == "C2") return family::c2;
    if (name == "D1") return family::d1;
    if (name == "D2") return family::d2;
    throw config_error("unknown ansatz family: " + name);
}

std::string family_to_string(family f) {
    switch (f) {
        case family::a_roto: return "A_roto";
        case family::a_free: return "A_free";
        case family::b1: return "B1";
        case family::b2: return "B2";
        case family::c1: return "C1";
        case family::c2: return "C2";
        case family::d1: return "D1";
        default: return "D2";
    }
}

bool family_is_roto(family f) {
    return f == family::a_roto || f == family::b1 || f == family::c1 || f == family::d1;
}

int ansatz_spec::param_layer_count() const {
    return family_is_roto(fam) ? 2 * n_layers : n_layers;
}

int ansatz_spec::slots_per_circuit_layer() const {
    return family_is_roto(fam) ? 2 * n_qubits : n_qubits;
}

namespace {

std::vector<entangler_gate> entangler_for(family f, int n) {
    std::vector<entangler_gate> gates;
    switch (f) {
        case family::a_roto:
        case family::a_free:
            for (int q = 0; q + 1 < n; ++q) gates.push_back({entangler_kind::cz, q, q + 1});
            break;
        case family::b1:
        case family::b2:
            for (int q = 0; q + 1 < n; ++q) gates.push_back({entangler_kind::cnot, q, q + 1});
            break;
        case family::c1:
        case family::c2:
            for (int q = 0; q + 1 < n; ++q) gates.push_back({entangler_kind::cnot, q, q + 1});
            gates.push_back({entangler_kind::cnot, n - 1, 0});
            break;
        case family::d1:
        case family::d2:
            for (int q = 1; q < n; ++q) gates.push_back({entangler_kind::cnot, 0, q});
            break;
    }
    return gates;
}

}  // namespace

ansatz_spec build_ansatz(family fam, int n_qubits, int n_layers) {
    if (n_qubits < 2) throw config_error("ansatz needs at least 2 qubits");
    if (n_layers < 1) throw config_error("ansatz needs at least 1 layer");
    ansatz_spec spec;
    spec.n_qubits = n_qubits;
    spec.n_layers = n_layers;
    spec.fam = fam;
    const bool roto = family_is_roto(fam);
    for (int l = 0; l < n_layers; ++l) {
        if (roto) {
            for (int q = 0; q < n_qubits; ++q)
                spec.slots.push_back({q, 2 * l, generator_kind::pauli_x});
            for (int q = 0; q < n_qubits; ++q)
                spec.slots.push_back({q, 2 * l + 1, generator_kind::pauli_y});
        } else {
            for (int q = 0; q < n_qubits; ++q)
                spec.slots.push_back({q, l, generator_kind::free_gate});
        }
        spec.entanglers.push_back(entangler_for(fam, n_qubits));
    }
    return spec;
}

gate2x2 gate_unitary(const gate_param& p, generator_kind gen) {
    gate2x2 u;
    switch (p.k) {
        case gate_param::kind::angle: {
            if (gen == generator_kind::free_gate)
                throw argument_error("angle parameter needs an X or Y generator");
            const double c = std::cos(p.v[0] / 2.0);
            const double s = std::sin(p.v[0] / 2.0);
            if (gen == generator_kind::pauli_x) {
                u.m = {cplx{c, 0}, -kI * s, -kI * s, cplx{c, 0}};
            } else {  // Y
                u.m = {cplx{c, 0}, cplx{-s, 0}, cplx{s, 0}, cplx{c, 0}};
            }
            break;
        }
        case gate_param::kind::axis: {
            check_unit(p.v.data(), 3);
            // -i (n . sigma), the theta = pi rotation
            const double nx = p.v[0], ny = p.v[1], nz = p.v[2];
            u.m = {cplx{0, -nz}, cplx{-ny, -nx}, cplx{ny, -nx}, cplx{0, nz}};
            break;
        }
        case gate_param::kind::quaternion: {
            check_unit(p.v.data(), 4);
            // q0 I - i (q1 X + q2 Y + q3 Z)
            const double q0 = p.v[0], q1 = p.v[1], q2 = p.v[2], q3 = p.v[3];
            u.m = {cplx{q0, -q3}, cplx{-q2, -q1}, cplx{q2, -q1}, cplx{q0, q3}};
            break;
        }
    }
    return u;
}

void check_params(const ansatz_spec& spec, const param_vector& params) {
    if (spec.slot_count() != spec.n_layers * spec.slots_per_circuit_layer() ||
        static_cast<int>(spec.entanglers.size()) != spec.n_layers)
        throw argument_error("ansatz spec layer structure is inconsistent");
    if (params.size() != spec.slots.size())
        throw argument_error("parameter vector length does not match slot count");
    for (std::size_t i = 0; i < params.size(); ++i) {
        const bool angle_slot = spec.slots[i].gen != generator_kind::free_gate;
        const bool angle_param = params[i].k == gate_param::kind::angle;
        if (angle_slot != angle_param)
            throw argument_error("parameter variant does not match slot generator");
    }
}

namespace {

state_vector run_impl(const ansatz_spec& spec, const param_vector& params, int substitute_slot,
                      const gate2x2* replacement) {
    check_params(spec, params);
    state_vector state(spec.n_qubits);
    const int per_layer = spec.slots_per_circuit_layer();
    int slot = 0;
    for (int l = 0; l < spec.n_layers; ++l) {
        for (int s = 0; s < per_layer; ++s, ++slot) {
            const gate_slot& gs = spec.slots[slot];
            const gate2x2 u = (slot == substitute_slot)
                                  ? *replacement
                                  : gate_unitary(params[slot], gs.gen);
            state.apply_single_qubit(u, gs.qubit);
        }
        for (const entangler_gate& e : spec.entanglers[l]) {
            if (e.kind == entangler_kind::cz) state.apply_cz(e.control, e.target);
            else state.apply_cnot(e.control, e.target);
        }
    }
    return state;
}

}  // namespace

state_vector run_circuit(const ansatz_spec& spec, const param_vector& params) {
    return run_impl(spec, params, -1, nullptr);
}

state_vector run_circuit_substituted(const ansatz_spec& spec, const param_vector& params,
                                     int substitute_slot, const gate2x2& replacement) {
    if (substitute_slot < 0 || substitute_slot >= spec.slot_count())
        throw argument_error("substituted slot index out of range");
    return run_impl(spec, params, substitute_slot, &replacement);
}

double evaluate_energy(const ansatz_spec& spec, const param_vector& params, const pauli_sum& obs) {
    return simcore::expectation(run_circuit(spec, params), obs);
}

}  // namespace fq::ansatz
