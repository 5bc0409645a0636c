#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace fq::simcore {

using cplx = std::complex<double>;

inline constexpr int kMaxQubits = 24;

enum class pauli : std::uint8_t { I, X, Y, Z };

char pauli_char(pauli p);
pauli pauli_from_char(char c);

// Weighted Pauli string over a fixed register width.
struct pauli_string {
    double coefficient = 0.0;
    std::vector<pauli> ops;
};

// Hermitian observable: sum of real-weighted Pauli strings plus a constant.
struct pauli_sum {
    int n_qubits = 0;
    std::vector<pauli_string> terms;
    double constant_offset = 0.0;

    void add_term(double coefficient, const std::vector<pauli>& ops);
    // ops given as text, e.g. "XZIIX" (qubit 0 leftmost).
    void add_term(double coefficient, const std::string& ops_text);
};

// 2x2 complex matrix, row major.
struct gate2x2 {
    std::array<cplx, 4> m{};

    cplx operator()(int r, int c) const { return m[2 * r + c]; }
    cplx& operator()(int r, int c) { return m[2 * r + c]; }
    bool is_unitary(double tol = 1e-10) const;
};

gate2x2 pauli_gate(pauli p);

// 2^n amplitudes of an n-qubit pure state.
// Qubit 0 is the leftmost (most significant) tensor factor: qubit q maps to
// bit (n-1-q) of the basis index.
class state_vector {
public:
    explicit state_vector(int n_qubits);  // |0...0>

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    cplx& operator[](std::size_t i) { return amps_[i]; }
    const cplx& operator[](std::size_t i) const { return amps_[i]; }

    double norm_sq() const;

    void apply_single_qubit(const gate2x2& gate, int qubit);
    void apply_cz(int a, int b);
    void apply_cnot(int control, int target);

private:
    int n_qubits_;
    std::vector<cplx> amps_;
};

state_vector prepare_zero(int n_qubits);

double expectation(const state_vector& state, const pauli_sum& obs);

// H|psi>, matrix-free. Used by the Lanczos oracle.
std::vector<cplx> apply_pauli_sum(const pauli_sum& obs, const std::vector<cplx>& v);

// 2^n x 2^n Hermitian matrix, row major.
struct density_matrix {
    int n_qubits = 0;
    std::vector<cplx> entries;  // dim*dim

    std::size_t dim() const { return std::size_t(1) << n_qubits; }
    cplx at(std::size_t r, std::size_t c) const { return entries[r * dim() + c]; }
    cplx& at(std::size_t r, std::size_t c) { return entries[r * dim() + c]; }
};

density_matrix make_density_matrix(const state_vector& state);

// Reduced state on `keep` (ascending qubit indices), traced from a pure state
// without materializing the full density matrix.
density_matrix reduced_density_matrix(const state_vector& state, const std::vector<int>& keep);

density_matrix partial_trace(const density_matrix& rho, const std::vector<int>& keep);

// Von Neumann entropy in bits (log base 2); eigenvalues below 1e-12 dropped.
double von_neumann_entropy(const density_matrix& rho);

}  // namespace fq::simcore
