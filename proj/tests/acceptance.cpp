// End-to-end acceptance checks. Prints one pass/fail line per criterion and
// exits nonzero if any hard criterion fails.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "harness.hpp"

using namespace fq;
using ansatz::family;
using ansatz::gate_param;
using ansatz::generator_kind;
using harness::run_config;
using optimizers::gate_eval_context;
using optimizers::optimizer_kind;

namespace {

constexpr double kPi = 3.14159265358979323846;

int hard_failures = 0;
int review_flags = 0;

void report(int id, const char* what, bool ok, bool hard = true) {
    if (!ok) (hard ? hard_failures : review_flags)++;
    std::printf("%s criterion %2d: %s\n", ok ? "PASS" : (hard ? "FAIL" : "REVIEW"), id, what);
    std::fflush(stdout);
}

gate_param random_axis(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    double n[3], norm = 0.0;
    for (double& x : n) norm += (x = gauss(rng)) * x;
    norm = std::sqrt(norm);
    return gate_param::make_axis(n[0] / norm, n[1] / norm, n[2] / norm);
}

gate_param random_quaternion(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    double q[4], norm = 0.0;
    for (double& x : q) norm += (x = gauss(rng)) * x;
    norm = std::sqrt(norm);
    return gate_param::make_quaternion(q[0] / norm, q[1] / norm, q[2] / norm, q[3] / norm);
}

simcore::pauli_sum random_observable(std::mt19937_64& rng, int n_qubits) {
    simcore::pauli_sum obs;
    obs.n_qubits = n_qubits;
    const char letters[] = {'I', 'X', 'Y', 'Z'};
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    for (int t = 0; t < 5; ++t) {
        std::string ops;
        for (int q = 0; q < n_qubits; ++q) ops += letters[rng() % 4];
        obs.add_term(coeff(rng), ops);
    }
    return obs;
}

void criterion_1() {
    const double heis = hamiltonians::exact_ground_energy(hamiltonians::heisenberg_1d({5, 1, 1}));
    const double hub =
        hamiltonians::exact_ground_energy(hamiltonians::fermi_hubbard_chain({3, 0.5, 0.5}));
    report(1, "benchmark ground energies (-8.47, -1.25)",
           std::abs(heis - (-8.47)) <= 0.01 && std::abs(hub - (-1.25)) <= 0.01);
}

void criterion_2() {
    const double eg =
        hamiltonians::exact_ground_energy(hamiltonians::fermi_hubbard_chain({3, 0.5, 0.0}));
    report(2, "free-fermion cross-check (-sqrt(2))", std::abs(eg + std::sqrt(2.0)) < 1e-6);
}

void criterion_3() {
    std::mt19937_64 rng(1001);
    bool ok = true;
    std::uniform_real_distribution<double> uni(-kPi, kPi);
    for (int inst = 0; inst < 100 && ok; ++inst) {
        // rotosolve vs dense angle scan
        {
            auto spec = ansatz::build_ansatz(family::a_roto, 3, 1);
            ansatz::param_vector params;
            for (int s = 0; s < spec.slot_count(); ++s)
                params.push_back(gate_param::make_angle(uni(rng)));
            const auto obs = random_observable(rng, 3);
            const int slot = static_cast<int>(rng() % spec.slot_count());
            gate_eval_context ctx{spec, params, slot, obs, nullptr};
            const auto res = optimizers::rotosolve_step(ctx);
            double best = 1e300;
            const int grid = 100000;
            for (int g = 0; g < grid; ++g) {
                const double theta = -kPi + 2.0 * kPi * g / grid;
                best = std::min(best, optimizers::probe_energy(
                                          ctx, ansatz::gate_unitary(gate_param::make_angle(theta),
                                                                    spec.slots[slot].gen)));
            }
            if (res.energy > best + 1e-6) ok = false;
        }
        // fraxis / fqs vs sampled axes and quaternions
        {
            auto spec = ansatz::build_ansatz(family::a_free, 3, 1);
            ansatz::param_vector params;
            for (int s = 0; s < spec.slot_count(); ++s) params.push_back(random_axis(rng));
            const auto obs = random_observable(rng, 3);
            const int slot = static_cast<int>(rng() % spec.slot_count());
            gate_eval_context ctx{spec, params, slot, obs, nullptr};
            const auto fr = optimizers::fraxis_step(ctx);
            double best = 1e300;
            for (int g = 0; g < 10000; ++g)
                best = std::min(best,
                                optimizers::probe_energy(
                                    ctx, ansatz::gate_unitary(random_axis(rng),
                                                              generator_kind::free_gate)));
            if (fr.energy > best + 1e-6) ok = false;

            params[slot] = random_quaternion(rng);
            const auto fq = optimizers::fqs_step(ctx);
            best = 1e300;
            for (int g = 0; g < 10000; ++g)
                best = std::min(best,
                                optimizers::probe_energy(
                                    ctx, ansatz::gate_unitary(random_quaternion(rng),
                                                              generator_kind::free_gate)));
            if (fq.energy > best + 1e-6) ok = false;
        }
    }
    report(3, "per-gate optimality vs dense scans (100 instances)", ok);
}

void criterion_4_and_5() {
    bool monotone = true;
    bool probe_counts = true;
    const auto h = hamiltonians::heisenberg_1d({5, 1, 1});
    for (auto kind : {optimizer_kind::rotosolve, optimizer_kind::fraxis, optimizer_kind::fqs}) {
        const long expected_probes =
            kind == optimizer_kind::rotosolve ? 3 : (kind == optimizer_kind::fraxis ? 6 : 10);
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            run_config cfg;
            cfg.hamiltonian = h;
            cfg.spec = ansatz::build_ansatz(
                kind == optimizer_kind::rotosolve ? family::a_roto : family::a_free, 5, 3);
            cfg.optimizer = kind;
            cfg.budget = 20L * cfg.spec.slot_count();
            cfg.seed = seed;
            const auto rec = harness::run_optimization(cfg);
            double prev = rec.initial_energy;
            for (const auto& up : rec.updates) {
                if (up.energy > prev + 1e-10) monotone = false;
                prev = up.energy;
            }
            if (rec.evals.probes != expected_probes * cfg.budget) probe_counts = false;
            if (rec.evals.confirmations != cfg.budget) probe_counts = false;
        }
    }
    report(4, "monotone descent on full 5-qubit runs (3 optimizers x 20 seeds)", monotone);
    report(5, "probe counters are exactly 3/6/10 per update", probe_counts);
}

void criterion_6() {
    bool ok = true;
    const auto h = hamiltonians::heisenberg_1d({5, 1, 1});
    for (std::uint64_t seed = 0; seed < 5 && ok; ++seed) {
        run_config base;
        base.hamiltonian = h;
        base.spec = ansatz::build_ansatz(family::a_roto, 5, 3);
        base.optimizer = optimizer_kind::rotosolve;
        base.budget = 10L * base.spec.slot_count();
        base.seed = seed;
        const auto baseline = harness::run_optimization(base);

        for (auto mode : {freezing::freeze_mode::fixed, freezing::freeze_mode::incremental}) {
            auto cfg = base;
            freezing::freeze_config fc;
            fc.threshold = 0.0;
            fc.mode = mode;
            fc.kappa = 5;
            cfg.freeze = fc;
            const auto frozen = harness::run_optimization(cfg);
            if (std::abs(frozen.final_energy - baseline.final_energy) >= 1e-12) ok = false;
            if (static_cast<long>(frozen.updates.size()) != base.budget) ok = false;
        }
    }
    report(6, "T=0 freezing matches baseline and spends the same budget", ok);
}

void criterion_7() {
    run_config base;
    base.hamiltonian = hamiltonians::heisenberg_1d({5, 1, 1});
    base.spec = ansatz::build_ansatz(family::a_roto, 5, 3);
    base.optimizer = optimizer_kind::rotosolve;
    base.budget = 50L * base.spec.slot_count();
    base.seed = 0;
    const auto variants = harness::sweep_experiment(
        base, {0.001}, {{freezing::freeze_mode::incremental, 1}}, 20, 4);
    std::vector<double> baseline, frozen;
    for (const auto& rec : variants[0].records) baseline.push_back(rec.final_energy);
    for (const auto& rec : variants[1].records) frozen.push_back(rec.final_energy);
    const double base_median = harness::compute_box_stats(baseline).median;
    const double frozen_median = harness::compute_box_stats(frozen).median;
    std::printf("       (medians: frozen %.6f vs baseline %.6f)\n", frozen_median, base_median);
    report(7, "incremental T=0.001 median <= baseline median (statistical)",
           frozen_median <= base_median, /*hard=*/false);
}

void criterion_8() {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> uni(-kPi, std::nextafter(kPi, 4.0));
    std::normal_distribution<double> gauss;
    bool ok = true;
    for (int i = 0; i < 10000 && ok; ++i) {
        const double a = uni(rng), b = uni(rng);
        const double da = freezing::angle_distance(a, b);
        if (da != freezing::angle_distance(b, a) || da < 0 || da > kPi + 1e-15) ok = false;

        std::array<double, 4> qa{}, qb{};
        double na = 0, nb = 0;
        for (int k = 0; k < 4; ++k) {
            na += (qa[k] = gauss(rng)) * qa[k];
            nb += (qb[k] = gauss(rng)) * qb[k];
        }
        for (int k = 0; k < 4; ++k) {
            qa[k] /= std::sqrt(na);
            qb[k] /= std::sqrt(nb);
        }
        const double dq = freezing::quaternion_distance(qa, qb);
        if (dq != freezing::quaternion_distance(qb, qa) || dq < 0 || dq > kPi / 2 + 1e-15)
            ok = false;
        auto qneg = qb;
        for (double& x : qneg) x = -x;
        if (std::abs(freezing::quaternion_distance(qa, qneg) - dq) > 1e-12) ok = false;

        const auto ua = ansatz::gate_unitary(
            gate_param::make_quaternion(qa[0], qa[1], qa[2], qa[3]), generator_kind::free_gate);
        auto ub = ansatz::gate_unitary(gate_param::make_quaternion(qb[0], qb[1], qb[2], qb[3]),
                                       generator_kind::free_gate);
        const double du = freezing::unitary_distance(ua, ub);
        if (du != freezing::unitary_distance(ub, ua) || du < 0 || du > 1 + 1e-15) ok = false;
        const auto phase = std::polar(1.0, uni(rng));
        auto ub_phased = ub;
        for (auto& e : ub_phased.m) e *= phase;
        if (std::abs(freezing::unitary_distance(ua, ub_phased) - du) > 1e-12) ok = false;

        std::vector<simcore::cplx> va(ua.m.begin(), ua.m.end()), vb(ub.m.begin(), ub.m.end());
        const double dn = freezing::unitary_distance_nqubit(va, vb);
        if (std::abs(dn - du) > 1e-12 || dn != freezing::unitary_distance_nqubit(vb, va))
            ok = false;
    }
    report(8, "metric axiom suite over 10^4 random samples", ok);
}

void criterion_9() {
    bool ok = true;

    simcore::state_vector bell(2);
    const double h = 1.0 / std::sqrt(2.0);
    simcore::gate2x2 had{{simcore::cplx{h, 0}, simcore::cplx{h, 0}, simcore::cplx{h, 0},
                          simcore::cplx{-h, 0}}};
    bell.apply_single_qubit(had, 0);
    bell.apply_cnot(0, 1);
    if (std::abs(harness::mutual_information_matrix(bell)[0][1] - 2.0) > 1e-10) ok = false;

    // entangler-free product circuit
    ansatz::ansatz_spec product;
    product.n_qubits = 4;
    product.n_layers = 1;
    product.fam = family::a_free;
    for (int q = 0; q < 4; ++q) product.slots.push_back({q, 0, generator_kind::free_gate});
    product.entanglers = {{}};
    const auto flat = harness::mutual_information_experiment(product, optimizer_kind::fqs, 10, 0);
    for (const auto& row : flat)
        for (double x : row)
            if (std::abs(x) > 1e-10) ok = false;

    // family A chain: neighbors dominate
    const auto spec = ansatz::build_ansatz(family::a_free, 5, 3);
    const auto mi = harness::mutual_information_experiment(spec, optimizer_kind::fqs, 1000, 1);
    double nn = 0, far = 0;
    int nn_count = 0, far_count = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            if (j == i + 1) {
                nn += mi[i][j];
                ++nn_count;
            } else {
                far += mi[i][j];
                ++far_count;
            }
        }
    if (!(nn / nn_count > far / far_count)) ok = false;

    report(9, "mutual information: Bell=2 bits, product=0, neighbors dominate", ok);
}

void criterion_10() {
    const auto rows =
        harness::scalability_experiment({5, 7, 9}, optimizer_kind::rotosolve, {0.005}, 3, 30,
                                        10, 6);
    bool all_close = true;
    double base_sum = 0, frozen_sum = 0;
    int base_count = 0, frozen_count = 0;
    for (const auto& row : rows) {
        if (row.rel_error > 0.15) all_close = false;
        if (row.variant == "baseline") {
            base_sum += row.rel_error;
            ++base_count;
        } else {
            frozen_sum += row.rel_error;
            ++frozen_count;
        }
    }
    const double base_mean = base_sum / base_count;
    const double frozen_mean = frozen_sum / frozen_count;
    std::printf("       (mean rel errors: frozen %.6f vs baseline %.6f)\n", frozen_mean,
                base_mean);
    report(10, "scalability n in {5,7,9}: rel error <= 0.15 and freezing no worse",
           all_close && frozen_mean <= base_mean);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4_and_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (review_flags > 0)
        std::printf("%d statistical criterion flagged for review\n", review_flags);
    if (hard_failures == 0)
        std::printf("acceptance: all hard criteria passed\n");
    else
        std::printf("acceptance: %d hard criteria FAILED\n", hard_failures);
    return hard_failures == 0 ? 0 : 1;
}
