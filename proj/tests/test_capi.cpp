// Exercises the shared library through the C surface only.

#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "freezeq/freezeq.h"

static int failures = 0;

#define EXPECT(cond, what)                                     \
    do {                                                       \
        if (!(cond)) {                                         \
            fprintf(stderr, "FAILED: %s (%s:%d)\n", what,      \
                    __FILE__, __LINE__);                       \
            failures++;                                        \
        }                                                      \
    } while (0)

static const char* run_config =
    "{\"hamiltonian\": {\"kind\": \"heisenberg\", \"n_sites\": 4},"
    " \"ansatz\": {\"family\": \"A_roto\", \"layers\": 1},"
    " \"optimizer\": {\"kind\": \"rotosolve\"},"
    " \"runs\": {\"count\": 1, \"seed\": 1, \"iterations\": 2}}";

int main(void) {
    EXPECT(fq_version() != NULL && strlen(fq_version()) > 0, "version string");

    /* Heisenberg handle */
    fq_hamiltonian* h = NULL;
    EXPECT(fq_hamiltonian_create_heisenberg(5, 1.0, 1.0, &h) == FQ_OK, "create heisenberg");
    int nq = 0;
    EXPECT(fq_hamiltonian_num_qubits(h, &nq) == FQ_OK && nq == 5, "num qubits");
    size_t terms = 0;
    EXPECT(fq_hamiltonian_num_terms(h, &terms) == FQ_OK && terms == 20, "term count 4n");
    double eg = 0.0;
    EXPECT(fq_hamiltonian_ground_energy(h, &eg) == FQ_OK, "ground energy status");
    EXPECT(fabs(eg - (-8.472135955)) < 1e-6, "heisenberg 5 ground energy");
    char* json = NULL;
    EXPECT(fq_hamiltonian_to_json(h, &json) == FQ_OK && json != NULL, "to json");
    EXPECT(strstr(json, "\"n_qubits\": 5") != NULL, "json mentions width");
    fq_string_free(json);
    fq_hamiltonian_free(h);

    /* Hubbard handle */
    fq_hamiltonian* hub = NULL;
    EXPECT(fq_hamiltonian_create_hubbard(3, 0.5, 0.5, &hub) == FQ_OK, "create hubbard");
    EXPECT(fq_hamiltonian_ground_energy(hub, &eg) == FQ_OK && fabs(eg + 1.2539) < 1e-3,
           "hubbard ground energy");
    fq_hamiltonian_free(hub);

    /* error mapping */
    fq_hamiltonian* bad = NULL;
    EXPECT(fq_hamiltonian_create_heisenberg(2, 1.0, 1.0, &bad) == FQ_ERR_CONFIG,
           "ring needs 3 sites");
    EXPECT(strlen(fq_last_error()) > 0, "diagnostic recorded");
    EXPECT(fq_hamiltonian_create_heisenberg(17, 1.0, 1.0, &bad) == FQ_OK, "build wide ring");
    EXPECT(fq_hamiltonian_ground_energy(bad, &eg) == FQ_ERR_RESOURCE, "oracle width cap");
    fq_hamiltonian_free(bad);
    EXPECT(fq_hamiltonian_num_qubits(NULL, &nq) == FQ_ERR_ARGUMENT, "null handle");

    /* config-driven construction and overrides */
    fq_hamiltonian* from_cfg = NULL;
    const char* overrides[] = {"hamiltonian.n_sites=3"};
    EXPECT(fq_hamiltonian_from_config(run_config, overrides, 1, &from_cfg) == FQ_OK,
           "from config");
    EXPECT(fq_hamiltonian_num_qubits(from_cfg, &nq) == FQ_OK && nq == 3, "override applied");
    fq_hamiltonian_free(from_cfg);
    EXPECT(fq_hamiltonian_from_config("nonsense", NULL, 0, &from_cfg) == FQ_ERR_CONFIG,
           "bad config maps to config status");

    /* exact command */
    double energy = 0.0;
    EXPECT(fq_cmd_exact(run_config, NULL, 0, &energy) == FQ_OK, "cmd exact");
    EXPECT(fabs(energy - (-8.0)) < 1e-6, "heisenberg 4 ground energy");

    /* run command end to end */
    const char* dir = "/tmp/fq_capi_out";
    char cleanup[128];
    snprintf(cleanup, sizeof cleanup, "rm -rf %s", dir);
    system(cleanup);
    EXPECT(fq_cmd_run(run_config, NULL, 0, dir, 1) == FQ_OK, "cmd run");
    char probe[128];
    snprintf(probe, sizeof probe, "%s/run_000.json", dir);
    FILE* f = fopen(probe, "r");
    EXPECT(f != NULL, "run record written");
    if (f) fclose(f);
    system(cleanup);

    if (failures == 0) printf("all C API checks passed\n");
    return failures == 0 ? 0 : 1;
}
