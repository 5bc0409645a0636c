#include "hamiltonians.hpp"

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <random>

namespace fq::hamiltonians {

using simcore::cplx;
using simcore::pauli;

pauli_sum heisenberg_1d(const heisenberg_params& params) {
    if (params.n_sites < 3)
        throw config_error("heisenberg ring needs at least 3 sites");
    const int n = params.n_sites;
    pauli_sum ham;
    ham.n_qubits = n;
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        for (pauli p : {pauli::X, pauli::Y, pauli::Z}) {
            std::vector<pauli> ops(n, pauli::I);
            ops[i] = p;
            ops[j] = p;
            ham.add_term(params.j, ops);
        }
    }
    for (int i = 0; i < n; ++i) {
        std::vector<pauli> ops(n, pauli::I);
        ops[i] = pauli::Z;
        ham.add_term(params.h, ops);
    }
    return ham;
}

pauli_sum fermi_hubbard_chain(const hubbard_params& params) {
    if (params.n_sites < 2)
        throw config_error("hubbard chain needs at least 2 sites");
    const int n_modes = 2 * params.n_sites;
    pauli_sum ham;
    ham.n_qubits = n_modes;

    // Hopping: -t (c_p^dag c_r + h.c.) -> -t/2 (X Z..Z X + Y Z..Z Y), p < r.
    auto add_hopping = [&](int p, int r) {
        for (pauli end : {pauli::X, pauli::Y}) {
            std::vector<pauli> ops(n_modes, pauli::I);
            ops[p] = end;
            ops[r] = end;
            for (int q = p + 1; q < r; ++q) ops[q] = pauli::Z;
            ham.add_term(-params.t / 2.0, ops);
        }
    };
    for (int site = 0; site + 1 < params.n_sites; ++site) {
        add_hopping(2 * site, 2 * site + 2);          // spin up
        add_hopping(2 * site + 1, 2 * site + 3);      // spin down
    }

    // On-site: U n_up n_dn = U/4 (I - Z_up - Z_dn + Z_up Z_dn).
    for (int site = 0; site < params.n_sites; ++site) {
        const int up = 2 * site;
        const int dn = 2 * site + 1;
        ham.constant_offset += params.u / 4.0;
        std::vector<pauli> zu(n_modes, pauli::I), zd(n_modes, pauli::I), zz(n_modes, pauli::I);
        zu[up] = pauli::Z;
        zd[dn] = pauli::Z;
        zz[up] = pauli::Z;
        zz[dn] = pauli::Z;
        ham.add_term(-params.u / 4.0, zu);
        ham.add_term(-params.u / 4.0, zd);
        ham.add_term(params.u / 4.0, zz);
    }
    return ham;
}

double ground_energy_dense(const pauli_sum& hamiltonian) {
    const int n = hamiltonian.n_qubits;
    const std::size_t dim = std::size_t(1) << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    // Column i of each term: P|i> = phase |i ^ xmask>.
    std::vector<cplx> col(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<cplx> basis(dim, cplx{});
        basis[i] = 1.0;
        // one basis column at a time keeps memory flat for n up to 10
        col = simcore::apply_pauli_sum(hamiltonian, basis);
        for (std::size_t r = 0; r < dim; ++r)
            if (col[r] != cplx{}) m(r, i) = col[r];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()[0];
}

double ground_energy_lanczos(const pauli_sum& hamiltonian) {
    const std::size_t dim = std::size_t(1) << hamiltonian.n_qubits;
    const int max_steps = static_cast<int>(std::min<std::size_t>(dim, 400));

    std::mt19937_64 rng(0x1f2e3d4c5b6a7988ULL);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<std::vector<cplx>> basis;  // full reorthogonalization
    std::vector<double> alpha, beta;

    std::vector<cplx> v(dim);
    for (auto& x : v) x = {gauss(rng), gauss(rng)};
    auto norm_of = [](const std::vector<cplx>& x) {
        double s = 0.0;
        for (const cplx& a : x) s += std::norm(a);
        return std::sqrt(s);
    };
    const double nv = norm_of(v);
    for (auto& x : v) x /= nv;

    double prev_ritz = 0.0;
    bool have_prev = false;
    for (int step = 0; step < max_steps; ++step) {
        basis.push_back(v);
        std::vector<cplx> w = simcore::apply_pauli_sum(hamiltonian, v);
        cplx a{};
        for (std::size_t i = 0; i < dim; ++i) a += std::conj(v[i]) * w[i];
        alpha.push_back(a.real());
        // reorthogonalize twice against the whole basis
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& b : basis) {
                cplx ov{};
                for (std::size_t i = 0; i < dim; ++i) ov += std::conj(b[i]) * w[i];
                for (std::size_t i = 0; i < dim; ++i) w[i] -= ov * b[i];
            }
        }
        const double b = norm_of(w);

        // lowest Ritz value of the current tridiagonal
        const int m = static_cast<int>(alpha.size());
        Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
        for (int i = 0; i < m; ++i) {
            tri(i, i) = alpha[i];
            if (i + 1 < m) tri(i, i + 1) = tri(i + 1, i) = beta[i];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tsolver(tri, Eigen::EigenvaluesOnly);
        const double ritz = tsolver.eigenvalues()[0];
        if (have_prev && std::abs(ritz - prev_ritz) < 1e-10) return ritz;
        prev_ritz = ritz;
        have_prev = true;

        if (b < 1e-12) return ritz;  // invariant subspace
        beta.push_back(b);
        for (std::size_t i = 0; i < dim; ++i) v[i] = w[i] / b;
    }
    return prev_ritz;
}

double exact_ground_energy(const pauli_sum& hamiltonian) {
    if (hamiltonian.n_qubits > kOracleMaxQubits)
        throw resource_error("exact ground-energy oracle limited to " +
                             std::to_string(kOracleMaxQubits) + " qubits");
    if (hamiltonian.n_qubits <= 10) return ground_energy_dense(hamiltonian);
    return ground_energy_lanczos(hamiltonian);
}

}  // namespace fq::hamiltonians
