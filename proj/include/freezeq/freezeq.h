#ifndef FREEZEQ_H
#define FREEZEQ_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes returned by every fallible call. On failure,
 * fq_last_error() holds a thread-local diagnostic message. */
typedef enum fq_status {
    FQ_OK = 0,
    FQ_ERR_ARGUMENT = 1,
    FQ_ERR_CONFIG = 2,
    FQ_ERR_RESOURCE = 3,
    FQ_ERR_NUMERIC = 4
} fq_status;

const char* fq_version(void);

/* Last error message on the calling thread; empty string if none. */
const char* fq_last_error(void);

/* Frees strings returned through output parameters below. */
void fq_string_free(char* s);

/* ---- Hamiltonians ---- */

typedef struct fq_hamiltonian fq_hamiltonian;

fq_status fq_hamiltonian_create_heisenberg(int n_sites, double coupling, double field,
                                           fq_hamiltonian** out);
fq_status fq_hamiltonian_create_hubbard(int n_sites, double hopping, double interaction,
                                        fq_hamiltonian** out);
/* Builds the Hamiltonian described by a JSON config document (the same
 * schema the CLI consumes), after applying the given overrides. */
fq_status fq_hamiltonian_from_config(const char* config_json, const char* const* overrides,
                                     size_t n_overrides, fq_hamiltonian** out);
void fq_hamiltonian_free(fq_hamiltonian* h);

fq_status fq_hamiltonian_num_qubits(const fq_hamiltonian* h, int* out);
fq_status fq_hamiltonian_num_terms(const fq_hamiltonian* h, size_t* out);
/* JSON document {n_qubits, constant_offset, terms:[{coefficient, paulis}]}.
 * Free *out with fq_string_free. */
fq_status fq_hamiltonian_to_json(const fq_hamiltonian* h, char** out);
/* Exact ground-state energy. Dense diagonalization through 10 qubits,
 * Lanczos through 16; FQ_ERR_RESOURCE above that. */
fq_status fq_hamiltonian_ground_energy(const fq_hamiltonian* h, double* out);

/* ---- Experiment commands ----
 * config_json is the experiment config document; overrides are
 * "section.key=value" strings applied on top of it. Outputs are written
 * atomically under output_dir. */

fq_status fq_cmd_run(const char* config_json, const char* const* overrides, size_t n_overrides,
                     const char* output_dir, int jobs);
fq_status fq_cmd_sweep(const char* config_json, const char* const* overrides, size_t n_overrides,
                       const char* output_dir, int jobs);
fq_status fq_cmd_exact(const char* config_json, const char* const* overrides, size_t n_overrides,
                       double* out_energy);
/* Aggregates final per-gate freeze counters from run_*.json records in
 * records_dir into per-threshold CSV heat maps. */
fq_status fq_cmd_heatmap(const char* records_dir, const char* output_dir);
fq_status fq_cmd_mutual_info(const char* config_json, const char* const* overrides,
                             size_t n_overrides, const char* output_dir);

#ifdef __cplusplus
}
#endif

#endif /* FREEZEQ_H */
