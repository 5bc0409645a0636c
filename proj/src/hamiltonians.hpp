#pragma once

#include "simcore.hpp"

namespace fq::hamiltonians {

using simcore::pauli_sum;

struct heisenberg_params {
    int n_sites = 0;
    double j = 1.0;  // spin interaction strength
    double h = 1.0;  // Z field strength
};

struct hubbard_params {
    int n_sites = 0;  // chain length; register width is 2*n_sites
    double t = 0.5;   // tunneling
    double u = 0.5;   // on-site interaction
};

// Cyclic 1-D Heisenberg ring: J * sum(XX + YY + ZZ) + h * sum(Z), 4n terms.
pauli_sum heisenberg_1d(const heisenberg_params& params);

// Open-boundary 1xN Fermi-Hubbard chain under the Jordan-Wigner mapping.
// Qubit 2i is site-i spin-up, qubit 2i+1 is site-i spin-down.
pauli_sum fermi_hubbard_chain(const hubbard_params& params);

inline constexpr int kOracleMaxQubits = 16;

// Lowest eigenvalue over the full Hilbert space. Dense diagonalization up to
// 10 qubits, Lanczos with full reorthogonalization for 11..16.
double exact_ground_energy(const pauli_sum& hamiltonian);

// Exposed for the oracle self-consistency check.
double ground_energy_dense(const pauli_sum& hamiltonian);
double ground_energy_lanczos(const pauli_sum& hamiltonian);

}  // namespace fq::hamiltonians
