#include <doctest.h>

#include <cmath>
#include <random>

#include "hamiltonians.hpp"
#include "optimizers.hpp"

using namespace fq;
using ansatz::family;
using ansatz::gate_param;
using ansatz::generator_kind;
using optimizers::eval_counter;
using optimizers::gate_eval_context;
using optimizers::sym_matrix;

namespace {
constexpr double kPi = 3.14159265358979323846;

simcore::pauli_sum single_z() {
    simcore::pauli_sum z;
    z.n_qubits = 1;
    z.add_term(1.0, "Z");
    return z;
}

// One-qubit layer. The roto variant carries the X,Y slot pair the family
// demands; tests drive slot 0 and leave the Y gate at identity.
ansatz::ansatz_spec one_qubit_spec(generator_kind gen) {
    ansatz::ansatz_spec spec;
    spec.n_qubits = 1;
    spec.n_layers = 1;
    if (gen == generator_kind::free_gate) {
        spec.fam = family::a_free;
        spec.slots = {{0, 0, gen}};
    } else {
        spec.fam = family::a_roto;
        spec.slots = {{0, 0, generator_kind::pauli_x}, {0, 1, generator_kind::pauli_y}};
    }
    spec.entanglers = {{}};
    return spec;
}

gate_param random_quaternion(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    double q[4], norm = 0.0;
    for (double& x : q) norm += (x = gauss(rng)) * x;
    norm = std::sqrt(norm);
    return gate_param::make_quaternion(q[0] / norm, q[1] / norm, q[2] / norm, q[3] / norm);
}

gate_param random_axis(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    double n[3], norm = 0.0;
    for (double& x : n) norm += (x = gauss(rng)) * x;
    norm = std::sqrt(norm);
    return gate_param::make_axis(n[0] / norm, n[1] / norm, n[2] / norm);
}

// small random problem: 3 qubits, 2 layers, random observable
struct random_instance {
    ansatz::ansatz_spec spec;
    ansatz::param_vector params;
    simcore::pauli_sum obs;
};

random_instance make_instance(family fam, std::mt19937_64& rng) {
    random_instance inst;
    inst.spec = ansatz::build_ansatz(fam, 3, 2);
    std::uniform_real_distribution<double> uni(-kPi, kPi);
    for (const auto& slot : inst.spec.slots) {
        if (slot.gen == generator_kind::free_gate) {
            inst.params.push_back(fam == family::a_free && rng() % 2
                                      ? random_axis(rng)
                                      : random_quaternion(rng));
        } else {
            inst.params.push_back(gate_param::make_angle(uni(rng)));
        }
    }
    inst.obs.n_qubits = 3;
    const char letters[] = {'I', 'X', 'Y', 'Z'};
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    for (int t = 0; t < 6; ++t) {
        std::string ops;
        for (int q = 0; q < 3; ++q) ops += letters[rng() % 4];
        inst.obs.add_term(coeff(rng), ops);
    }
    return inst;
}

}  // namespace

TEST_CASE("jacobi eigensolver on worked examples") {
    sym_matrix diag;
    diag.k = 3;
    diag.a = {3, 0, 0, 0, 1, 0, 0, 0, 2};
    const auto low = optimizers::symmetric_eigen_lowest(diag);
    CHECK(low.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(low.vector[0] == doctest::Approx(0.0));
    CHECK(low.vector[1] == doctest::Approx(1.0));
    CHECK(low.vector[2] == doctest::Approx(0.0));

    sym_matrix eye;
    eye.k = 4;
    eye.a.assign(16, 0.0);
    for (int i = 0; i < 4; ++i) eye.a[i * 4 + i] = 1.0;
    const auto deg = optimizers::symmetric_eigen_lowest(eye);
    CHECK(deg.value == doctest::Approx(1.0));
    CHECK(deg.vector[0] == doctest::Approx(1.0));  // canonical tie-break

    sym_matrix bad;
    bad.k = 2;
    bad.a = {1, 2, 3, 1};
    CHECK_THROWS_AS(optimizers::symmetric_eigen_lowest(bad), argument_error);
}

TEST_CASE("jacobi residual on random symmetric matrices") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> uni(-5.0, 5.0);
    for (int rep = 0; rep < 50; ++rep) {
        sym_matrix a;
        a.k = 4;
        a.a.assign(16, 0.0);
        for (int r = 0; r < 4; ++r)
            for (int c = r; c < 4; ++c) a.at(r, c) = a.at(c, r) = uni(rng);
        const auto low = optimizers::symmetric_eigen_lowest(a);
        double vnorm = 0.0;
        for (int r = 0; r < 4; ++r) {
            double av = 0.0;
            for (int c = 0; c < 4; ++c) av += a.at(r, c) * low.vector[c];
            const double resid = av - low.value * low.vector[r];
            CHECK(std::abs(resid) < 1e-10);
            vnorm += low.vector[r] * low.vector[r];
        }
        CHECK(vnorm == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("rotosolve on the cos(theta) landscape jumps to the minimum") {
    const auto spec = one_qubit_spec(generator_kind::pauli_x);
    const auto z = single_z();
    ansatz::param_vector params{gate_param::make_angle(0.7), gate_param::make_angle(0.0)};
    eval_counter counter;
    gate_eval_context ctx{spec, params, 0, z, &counter};
    const auto res = optimizers::rotosolve_step(ctx);
    CHECK(res.energy == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(std::abs(res.param.angle()) == doctest::Approx(kPi));  // theta* = pi
    CHECK(counter.probes == 3);
    CHECK(counter.confirmations == 1);
}

TEST_CASE("rotosolve flat landscape picks -pi/2 and keeps the energy") {
    // observable is a constant: landscape amplitude A = 0
    const auto spec = one_qubit_spec(generator_kind::pauli_x);
    simcore::pauli_sum constant;
    constant.n_qubits = 1;
    constant.constant_offset = 0.75;
    ansatz::param_vector params{gate_param::make_angle(0.3), gate_param::make_angle(0.0)};
    gate_eval_context ctx{spec, params, 0, constant, nullptr};
    const auto res = optimizers::rotosolve_step(ctx);
    CHECK(res.param.angle() == doctest::Approx(-kPi / 2.0));
    CHECK(res.energy == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("rotosolve rejects non-angle slots") {
    const auto spec = one_qubit_spec(generator_kind::free_gate);
    ansatz::param_vector params{gate_param::make_quaternion(1, 0, 0, 0)};
    gate_eval_context ctx{spec, params, 0, single_z(), nullptr};
    CHECK_THROWS_AS(optimizers::rotosolve_step(ctx), argument_error);
}

TEST_CASE("fraxis moments reproduce the single-qubit worked example") {
    const auto spec = one_qubit_spec(generator_kind::free_gate);
    ansatz::param_vector params{gate_param::make_axis(1, 0, 0)};
    eval_counter counter;
    gate_eval_context ctx{spec, params, 0, single_z(), &counter};
    const auto m = optimizers::measure_fraxis_moments(ctx);
    CHECK(m.r_x == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(m.r_y == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(m.r_z == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m.r_xy == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(m.r_xz == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(m.r_yz == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(counter.probes == 6);

    const auto a = optimizers::fraxis_matrix(m);
    CHECK(a.at(0, 0) == doctest::Approx(-2.0));
    CHECK(a.at(1, 1) == doctest::Approx(-2.0));
    CHECK(a.at(2, 2) == doctest::Approx(2.0));
    CHECK(a.at(0, 1) == doctest::Approx(0.0));
    CHECK(a.at(0, 2) == doctest::Approx(0.0));
    CHECK(a.at(1, 2) == doctest::Approx(0.0));
}

TEST_CASE("fraxis step on the worked example reaches -1") {
    const auto spec = one_qubit_spec(generator_kind::free_gate);
    ansatz::param_vector params{gate_param::make_axis(1, 0, 0)};
    eval_counter counter;
    gate_eval_context ctx{spec, params, 0, single_z(), &counter};
    const auto res = optimizers::fraxis_step(ctx);
    CHECK(res.energy == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(std::abs(res.param.v[2]) < 1e-9);  // optimal axis lies in the x-y plane
    CHECK(counter.probes == 6);
    CHECK(counter.confirmations == 1);
}

TEST_CASE("fqs S-matrix single-qubit worked example") {
    const auto spec = one_qubit_spec(generator_kind::free_gate);
    ansatz::param_vector params{gate_param::make_quaternion(1, 0, 0, 0)};
    eval_counter counter;
    gate_eval_context ctx{spec, params, 0, single_z(), &counter};
    const auto s = optimizers::fqs_smatrix(ctx);
    CHECK(counter.probes == 10);
    CHECK(s.at(0, 0) == doctest::Approx(1.0).epsilon(1e-12));   // identity probe
    CHECK(s.at(1, 1) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(s.at(2, 2) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(s.at(3, 3) == doctest::Approx(1.0).epsilon(1e-12));
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) CHECK(s.at(r, c) == s.at(c, r));  // exact symmetry

    const auto res = optimizers::fqs_step(ctx);
    CHECK(res.energy == doctest::Approx(-1.0).epsilon(1e-12));
    // optimal quaternion in span{e_x, e_y}
    CHECK(std::abs(res.param.v[0]) < 1e-9);
    CHECK(std::abs(res.param.v[3]) < 1e-9);
}

TEST_CASE("rotosolve matches a dense angle scan on random instances") {
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 10; ++rep) {
        auto inst = make_instance(family::b1, rng);
        const int slot = static_cast<int>(rng() % inst.spec.slot_count());
        gate_eval_context ctx{inst.spec, inst.params, slot, inst.obs, nullptr};
        const auto res = optimizers::rotosolve_step(ctx);

        double best = 1e300;
        const int grid = 20000;
        for (int g = 0; g < grid; ++g) {
            const double theta = -kPi + 2.0 * kPi * g / grid;
            const auto u = ansatz::gate_unitary(gate_param::make_angle(theta),
                                                inst.spec.slots[slot].gen);
            best = std::min(best, optimizers::probe_energy(ctx, u));
        }
        CHECK(res.energy <= best + 1e-6);
    }
}

TEST_CASE("fraxis and fqs beat dense samples on random instances") {
    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 5; ++rep) {
        auto inst = make_instance(family::a_free, rng);
        // force a known param kind per slot under test
        const int slot = static_cast<int>(rng() % inst.spec.slot_count());

        inst.params[slot] = random_axis(rng);
        {
            gate_eval_context ctx{inst.spec, inst.params, slot, inst.obs, nullptr};
            const auto res = optimizers::fraxis_step(ctx);
            double best = 1e300;
            for (int g = 0; g < 2000; ++g) {
                const auto axis = random_axis(rng);
                const auto u = ansatz::gate_unitary(axis, generator_kind::free_gate);
                best = std::min(best, optimizers::probe_energy(ctx, u));
            }
            CHECK(res.energy <= best + 1e-6);
        }

        inst.params[slot] = random_quaternion(rng);
        {
            gate_eval_context ctx{inst.spec, inst.params, slot, inst.obs, nullptr};
            const auto res = optimizers::fqs_step(ctx);
            double best = 1e300;
            for (int g = 0; g < 2000; ++g) {
                const auto q = random_quaternion(rng);
                const auto u = ansatz::gate_unitary(q, generator_kind::free_gate);
                best = std::min(best, optimizers::probe_energy(ctx, u));
            }
            CHECK(res.energy <= best + 1e-6);
        }
    }
}

TEST_CASE("updates are monotone and idempotent") {
    std::mt19937_64 rng(31);
    for (family fam : {family::a_roto, family::a_free}) {
        auto inst = make_instance(fam, rng);
        double energy = ansatz::evaluate_energy(inst.spec, inst.params, inst.obs);
        for (int slot = 0; slot < inst.spec.slot_count(); ++slot) {
            gate_eval_context ctx{inst.spec, inst.params, slot, inst.obs, nullptr};
            const auto step = optimizers::optimize_gate(ctx);
            CHECK(step.energy <= energy + 1e-10);
            inst.params[slot] = step.param;
            energy = step.energy;

            // a second pass over the same slot cannot improve
            const auto again = optimizers::optimize_gate(ctx);
            CHECK(std::abs(again.energy - energy) < 1e-10);
            inst.params[slot] = again.param;
            energy = again.energy;
        }
    }
}

TEST_CASE("eigenvector sign does not change the energy") {
    std::mt19937_64 rng(37);
    auto inst = make_instance(family::a_free, rng);
    const int slot = 2;
    inst.params[slot] = random_quaternion(rng);
    gate_eval_context ctx{inst.spec, inst.params, slot, inst.obs, nullptr};
    const auto res = optimizers::fqs_step(ctx);
    const auto& q = res.param.v;
    const auto u_pos = ansatz::gate_unitary(gate_param::make_quaternion(q[0], q[1], q[2], q[3]),
                                            generator_kind::free_gate);
    const auto u_neg = ansatz::gate_unitary(
        gate_param::make_quaternion(-q[0], -q[1], -q[2], -q[3]), generator_kind::free_gate);
    CHECK(optimizers::probe_energy(ctx, u_pos) ==
          doctest::Approx(optimizers::probe_energy(ctx, u_neg)).epsilon(1e-12));
}

TEST_CASE("optimizer name round trips") {
    for (const char* name : {"rotosolve", "fraxis", "fqs"})
        CHECK(optimizers::optimizer_to_string(optimizers::optimizer_from_string(name)) == name);
    CHECK_THROWS_AS(optimizers::optimizer_from_string("adam"), config_error);
}
