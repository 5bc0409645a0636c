#include "freezeq/freezeq.h"

#include <cstring>
#include <string>
#include <vector>

#include "experiments.hpp"

namespace {

thread_local std::string g_last_error;

fq_status fail(fq_status code, const char* what) {
    g_last_error = what ? what : "";
    return code;
}

// Runs fn, translating the library's exception types to status codes.
template <typename F>
fq_status guarded(F&& fn) {
    try {
        fn();
        g_last_error.clear();
        return FQ_OK;
    } catch (const fq::argument_error& e) {
        return fail(FQ_ERR_ARGUMENT, e.what());
    } catch (const fq::config_error& e) {
        return fail(FQ_ERR_CONFIG, e.what());
    } catch (const fq::resource_error& e) {
        return fail(FQ_ERR_RESOURCE, e.what());
    } catch (const fq::numeric_error& e) {
        return fail(FQ_ERR_NUMERIC, e.what());
    } catch (const std::bad_alloc& e) {
        return fail(FQ_ERR_RESOURCE, e.what());
    } catch (const std::exception& e) {
        return fail(FQ_ERR_ARGUMENT, e.what());
    }
}

std::vector<std::string> collect_overrides(const char* const* overrides, size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        if (!overrides[i]) throw fq::argument_error("override string is null");
        out.emplace_back(overrides[i]);
    }
    return out;
}

std::string require(const char* s, const char* name) {
    if (!s) throw fq::argument_error(std::string(name) + " is null");
    return s;
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

struct fq_hamiltonian {
    fq::simcore::pauli_sum op;
};

extern "C" {

const char* fq_version(void) { return fq::experiments::kVersion; }

const char* fq_last_error(void) { return g_last_error.c_str(); }

void fq_string_free(char* s) { delete[] s; }

fq_status fq_hamiltonian_create_heisenberg(int n_sites, double coupling, double field,
                                           fq_hamiltonian** out) {
    return guarded([&] {
        if (!out) throw fq::argument_error("out is null");
        *out = new fq_hamiltonian{fq::hamiltonians::heisenberg_1d({n_sites, coupling, field})};
    });
}

fq_status fq_hamiltonian_create_hubbard(int n_sites, double hopping, double interaction,
                                        fq_hamiltonian** out) {
    return guarded([&] {
        if (!out) throw fq::argument_error("out is null");
        *out =
            new fq_hamiltonian{fq::hamiltonians::fermi_hubbard_chain({n_sites, hopping, interaction})};
    });
}

fq_status fq_hamiltonian_from_config(const char* config_json, const char* const* overrides,
                                     size_t n_overrides, fq_hamiltonian** out) {
    return guarded([&] {
        if (!out) throw fq::argument_error("out is null");
        const auto cfg = fq::config::parse_config(require(config_json, "config_json"),
                                                  collect_overrides(overrides, n_overrides));
        *out = new fq_hamiltonian{cfg.build_hamiltonian()};
    });
}

void fq_hamiltonian_free(fq_hamiltonian* h) { delete h; }

fq_status fq_hamiltonian_num_qubits(const fq_hamiltonian* h, int* out) {
    return guarded([&] {
        if (!h || !out) throw fq::argument_error("null argument");
        *out = h->op.n_qubits;
    });
}

fq_status fq_hamiltonian_num_terms(const fq_hamiltonian* h, size_t* out) {
    return guarded([&] {
        if (!h || !out) throw fq::argument_error("null argument");
        *out = h->op.terms.size();
    });
}

fq_status fq_hamiltonian_to_json(const fq_hamiltonian* h, char** out) {
    return guarded([&] {
        if (!h || !out) throw fq::argument_error("null argument");
        *out = dup_string(fq::experiments::pauli_sum_to_json(h->op));
    });
}

fq_status fq_hamiltonian_ground_energy(const fq_hamiltonian* h, double* out) {
    return guarded([&] {
        if (!h || !out) throw fq::argument_error("null argument");
        *out = fq::hamiltonians::exact_ground_energy(h->op);
    });
}

fq_status fq_cmd_run(const char* config_json, const char* const* overrides, size_t n_overrides,
                     const char* output_dir, int jobs) {
    return guarded([&] {
        fq::experiments::cmd_run(require(config_json, "config_json"),
                                 collect_overrides(overrides, n_overrides),
                                 require(output_dir, "output_dir"), jobs);
    });
}

fq_status fq_cmd_sweep(const char* config_json, const char* const* overrides, size_t n_overrides,
                       const char* output_dir, int jobs) {
    return guarded([&] {
        fq::experiments::cmd_sweep(require(config_json, "config_json"),
                                   collect_overrides(overrides, n_overrides),
                                   require(output_dir, "output_dir"), jobs);
    });
}

fq_status fq_cmd_exact(const char* config_json, const char* const* overrides, size_t n_overrides,
                       double* out_energy) {
    return guarded([&] {
        if (!out_energy) throw fq::argument_error("out_energy is null");
        *out_energy = fq::experiments::cmd_exact(require(config_json, "config_json"),
                                                 collect_overrides(overrides, n_overrides));
    });
}

fq_status fq_cmd_heatmap(const char* records_dir, const char* output_dir) {
    return guarded([&] {
        fq::experiments::cmd_heatmap(require(records_dir, "records_dir"),
                                     require(output_dir, "output_dir"));
    });
}

fq_status fq_cmd_mutual_info(const char* config_json, const char* const* overrides,
                             size_t n_overrides, const char* output_dir) {
    return guarded([&] {
        fq::experiments::cmd_mutual_info(require(config_json, "config_json"),
                                         collect_overrides(overrides, n_overrides),
                                         require(output_dir, "output_dir"));
    });
}

}  // extern "C"
