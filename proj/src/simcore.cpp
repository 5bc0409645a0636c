#include "simcore.hpp"

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <string>

namespace fq::simcore {

namespace {

constexpr cplx kI{0.0, 1.0};

// Basis-index bit position of a qubit (qubit 0 = most significant).
inline int bit_of(int n_qubits, int qubit) { return n_qubits - 1 - qubit; }

struct term_masks {
    std::uint64_t x_mask = 0;  // flips (X and Y positions)
    std::uint64_t z_mask = 0;  // sign bits (Y and Z positions)
    int y_count = 0;
};

term_masks masks_for(const pauli_string& term, int n_qubits) {
    term_masks mk;
    for (int q = 0; q < n_qubits; ++q) {
        const std::uint64_t bit = std::uint64_t(1) << bit_of(n_qubits, q);
        switch (term.ops[q]) {
            case pauli::I: break;
            case pauli::X: mk.x_mask |= bit; break;
            case pauli::Y: mk.x_mask |= bit; mk.z_mask |= bit; ++mk.y_count; break;
            case pauli::Z: mk.z_mask |= bit; break;
        }
    }
    return mk;
}

// i^k
cplx i_pow(int k) {
    switch (k & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

}  // namespace

char pauli_char(pauli p) {
    switch (p) {
        case pauli::I: return 'I';
        case pauli::X: return 'X';
        case pauli::Y: return 'Y';
        default: return 'Z';
    }
}

pauli pauli_from_char(char c) {
    switch (c) {
        case 'I': return pauli::I;
        case 'X': return pauli::X;
        case 'Y': return pauli::Y;
        case 'Z': return pauli::Z;
        default: throw argument_error(std::string("invalid pauli character: ") + c);
    }
}

void pauli_sum::add_term(double coefficient, const std::vector<pauli>& ops) {
    if (!std::isfinite(coefficient))
        throw argument_error("pauli term coefficient must be finite");
    if (static_cast<int>(ops.size()) != n_qubits)
        throw argument_error("pauli term width does not match operator width");
    terms.push_back({coefficient, ops});
}

void pauli_sum::add_term(double coefficient, const std::string& ops_text) {
    std::vector<pauli> ops;
    ops.reserve(ops_text.size());
    for (char c : ops_text) ops.push_back(pauli_from_char(c));
    add_term(coefficient, ops);
}

bool gate2x2::is_unitary(double tol) const {
    // U^dagger U == I
    const cplx a = std::conj(m[0]) * m[0] + std::conj(m[2]) * m[2];
    const cplx b = std::conj(m[0]) * m[1] + std::conj(m[2]) * m[3];
    const cplx d = std::conj(m[1]) * m[1] + std::conj(m[3]) * m[3];
    return std::abs(a - 1.0) < tol && std::abs(b) < tol && std::abs(d - 1.0) < tol;
}

gate2x2 pauli_gate(pauli p) {
    const cplx one{1, 0}, zero{};
    switch (p) {
        case pauli::I: return gate2x2{{one, zero, zero, one}};
        case pauli::X: return gate2x2{{zero, one, one, zero}};
        case pauli::Y: return gate2x2{{zero, -kI, kI, zero}};
        default: return gate2x2{{one, zero, zero, -one}};
    }
}

state_vector::state_vector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw config_error("qubit count must be in [1, " + std::to_string(kMaxQubits) + "]");
    amps_.assign(std::size_t(1) << n_qubits, cplx{});
    amps_[0] = 1.0;
}

state_vector prepare_zero(int n_qubits) { return state_vector(n_qubits); }

double state_vector::norm_sq() const {
    double s = 0.0;
    for (const cplx& a : amps_) s += std::norm(a);
    return s;
}

void state_vector::apply_single_qubit(const gate2x2& gate, int qubit) {
    if (qubit < 0 || qubit >= n_qubits_) throw argument_error("qubit index out of range");
    const std::size_t stride = std::size_t(1) << bit_of(n_qubits_, qubit);
    const std::size_t dim = amps_.size();
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const cplx a0 = amps_[i];
            const cplx a1 = amps_[i + stride];
            amps_[i] = gate.m[0] * a0 + gate.m[1] * a1;
            amps_[i + stride] = gate.m[2] * a0 + gate.m[3] * a1;
        }
    }
}

void state_vector::apply_cz(int a, int b) {
    if (a == b) throw argument_error("entangler qubits must differ");
    if (a < 0 || a >= n_qubits_ || b < 0 || b >= n_qubits_)
        throw argument_error("qubit index out of range");
    const std::uint64_t mask =
        (std::uint64_t(1) << bit_of(n_qubits_, a)) | (std::uint64_t(1) << bit_of(n_qubits_, b));
    for (std::size_t i = 0; i < amps_.size(); ++i)
        if ((i & mask) == mask) amps_[i] = -amps_[i];
}

void state_vector::apply_cnot(int control, int target) {
    if (control == target) throw argument_error("entangler qubits must differ");
    if (control < 0 || control >= n_qubits_ || target < 0 || target >= n_qubits_)
        throw argument_error("qubit index out of range");
    const std::uint64_t cbit = std::uint64_t(1) << bit_of(n_qubits_, control);
    const std::uint64_t tbit = std::uint64_t(1) << bit_of(n_qubits_, target);
    for (std::size_t i = 0; i < amps_.size(); ++i)
        if ((i & cbit) && !(i & tbit)) std::swap(amps_[i], amps_[i | tbit]);
}

double expectation(const state_vector& state, const pauli_sum& obs) {
    if (obs.n_qubits != state.n_qubits())
        throw argument_error("observable width does not match state width");
    const auto& amps = state.amplitudes();
    cplx total = 0.0;
    for (const auto& term : obs.terms) {
        const term_masks mk = masks_for(term, obs.n_qubits);
        const cplx prefactor = i_pow(mk.y_count);
        cplx acc = 0.0;
        for (std::size_t i = 0; i < amps.size(); ++i) {
            const double sign = (std::popcount(i & mk.z_mask) & 1) ? -1.0 : 1.0;
            acc += std::conj(amps[i ^ mk.x_mask]) * (sign * amps[i]);
        }
        total += term.coefficient * prefactor * acc;
    }
    if (std::abs(total.imag()) >= 1e-10)
        throw numeric_error("expectation value has non-negligible imaginary part");
    return total.real() + obs.constant_offset;
}

std::vector<cplx> apply_pauli_sum(const pauli_sum& obs, const std::vector<cplx>& v) {
    const std::size_t dim = std::size_t(1) << obs.n_qubits;
    if (v.size() != dim) throw argument_error("vector dimension does not match operator width");
    std::vector<cplx> out(dim, cplx{});
    for (const auto& term : obs.terms) {
        const term_masks mk = masks_for(term, obs.n_qubits);
        const cplx prefactor = term.coefficient * i_pow(mk.y_count);
        for (std::size_t i = 0; i < dim; ++i) {
            const double sign = (std::popcount(i & mk.z_mask) & 1) ? -1.0 : 1.0;
            out[i ^ mk.x_mask] += prefactor * sign * v[i];
        }
    }
    if (obs.constant_offset != 0.0)
        for (std::size_t i = 0; i < dim; ++i) out[i] += obs.constant_offset * v[i];
    return out;
}

density_matrix make_density_matrix(const state_vector& state) {
    density_matrix rho;
    rho.n_qubits = state.n_qubits();
    const auto& amps = state.amplitudes();
    const std::size_t dim = amps.size();
    rho.entries.resize(dim * dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) rho.entries[r * dim + c] = amps[r] * std::conj(amps[c]);
    return rho;
}

namespace {

void check_keep(const std::vector<int>& keep, int n_qubits) {
    if (keep.empty()) throw argument_error("keep set must be nonempty");
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= n_qubits) throw argument_error("keep index out of range");
        if (i > 0 && keep[i] <= keep[i - 1])
            throw argument_error("keep indices must be strictly ascending");
    }
}

// Build full basis index from a kept-subsystem index and environment index.
std::size_t compose_index(std::size_t kept, std::size_t env, const std::vector<int>& keep_bits,
                          const std::vector<int>& env_bits) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < keep_bits.size(); ++i)
        if (kept & (std::size_t(1) << (keep_bits.size() - 1 - i))) idx |= std::size_t(1) << keep_bits[i];
    for (std::size_t i = 0; i < env_bits.size(); ++i)
        if (env & (std::size_t(1) << (env_bits.size() - 1 - i))) idx |= std::size_t(1) << env_bits[i];
    return idx;
}

// Bit positions (in basis-index space) of kept and traced-out qubits, in qubit order.
void split_bits(int n_qubits, const std::vector<int>& keep, std::vector<int>& keep_bits,
                std::vector<int>& env_bits) {
    std::vector<bool> kept(n_qubits, false);
    for (int q : keep) kept[q] = true;
    for (int q = 0; q < n_qubits; ++q) {
        const int bit = n_qubits - 1 - q;
        if (kept[q]) keep_bits.push_back(bit);
        else env_bits.push_back(bit);
    }
}

}  // namespace

density_matrix reduced_density_matrix(const state_vector& state, const std::vector<int>& keep) {
    check_keep(keep, state.n_qubits());
    std::vector<int> keep_bits, env_bits;
    split_bits(state.n_qubits(), keep, keep_bits, env_bits);

    density_matrix out;
    out.n_qubits = static_cast<int>(keep.size());
    const std::size_t kdim = std::size_t(1) << keep.size();
    const std::size_t edim = std::size_t(1) << env_bits.size();
    out.entries.assign(kdim * kdim, cplx{});
    const auto& amps = state.amplitudes();
    for (std::size_t a = 0; a < kdim; ++a) {
        for (std::size_t b = 0; b < kdim; ++b) {
            cplx acc = 0.0;
            for (std::size_t e = 0; e < edim; ++e) {
                acc += amps[compose_index(a, e, keep_bits, env_bits)] *
                       std::conj(amps[compose_index(b, e, keep_bits, env_bits)]);
            }
            out.entries[a * kdim + b] = acc;
        }
    }
    return out;
}

density_matrix partial_trace(const density_matrix& rho, const std::vector<int>& keep) {
    check_keep(keep, rho.n_qubits);
    std::vector<int> keep_bits, env_bits;
    split_bits(rho.n_qubits, keep, keep_bits, env_bits);

    density_matrix out;
    out.n_qubits = static_cast<int>(keep.size());
    const std::size_t kdim = std::size_t(1) << keep.size();
    const std::size_t edim = std::size_t(1) << env_bits.size();
    const std::size_t dim = rho.dim();
    out.entries.assign(kdim * kdim, cplx{});
    for (std::size_t a = 0; a < kdim; ++a) {
        for (std::size_t b = 0; b < kdim; ++b) {
            cplx acc = 0.0;
            for (std::size_t e = 0; e < edim; ++e) {
                const std::size_t r = compose_index(a, e, keep_bits, env_bits);
                const std::size_t c = compose_index(b, e, keep_bits, env_bits);
                acc += rho.entries[r * dim + c];
            }
            out.entries[a * kdim + b] = acc;
        }
    }
    return out;
}

double von_neumann_entropy(const density_matrix& rho) {
    const std::size_t dim = rho.dim();
    Eigen::MatrixXcd m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) m(r, c) = rho.entries[r * dim + c];
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() >= 1e-10)
        throw argument_error("density matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const double lambda = solver.eigenvalues()[i];
        if (lambda > 1e-12) s -= lambda * std::log2(lambda);
    }
    return s < 0.0 ? 0.0 : s;
}

}  // namespace fq::simcore
