#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace fq::experiments {

inline constexpr const char* kVersion = "0.1.0";

// Serialization used by the record files and the C API.
std::string pauli_sum_to_json(const simcore::pauli_sum& op);
simcore::pauli_sum pauli_sum_from_json(const std::string& text);

std::string run_record_to_json(const harness::run_record& rec, const config::experiment_config& cfg,
                               const std::string& variant, double threshold,
                               const std::string& hash);

// Command implementations behind the CLI / C API. Each writes its outputs
// with temp-file + rename so failures leave no partial files.
void cmd_run(const std::string& config_text, const std::vector<std::string>& overrides,
             const std::string& output_dir, int jobs);
void cmd_sweep(const std::string& config_text, const std::vector<std::string>& overrides,
               const std::string& output_dir, int jobs);
double cmd_exact(const std::string& config_text, const std::vector<std::string>& overrides);
void cmd_heatmap(const std::string& records_dir, const std::string& output_dir);
void cmd_mutual_info(const std::string& config_text, const std::vector<std::string>& overrides,
                     const std::string& output_dir);

}  // namespace fq::experiments
