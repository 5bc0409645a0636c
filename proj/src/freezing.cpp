#include "freezing.hpp"

#include <algorithm>
#include <cmath>

namespace fq::freezing {

namespace {
constexpr double kPi = 3.14159265358979323846;

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }
}  // namespace

double angle_distance(double prev, double next) {
    const double direct = std::abs(prev - next);
    return std::min(direct, 2.0 * kPi - direct);
}

double quaternion_distance(const std::array<double, 4>& prev, const std::array<double, 4>& next) {
    double dot = 0.0;
    for (int i = 0; i < 4; ++i) dot += prev[i] * next[i];
    const double dg = std::acos(clamp_unit(dot));
    return std::min(dg, kPi - dg);
}

double unitary_distance(const gate2x2& prev, const gate2x2& next) {
    cplx overlap{};
    for (int i = 0; i < 4; ++i) overlap += std::conj(prev.m[i]) * next.m[i];
    return std::sqrt(std::max(0.0, 4.0 - 2.0 * std::abs(overlap))) / 2.0;
}

double unitary_distance_nqubit(const std::vector<cplx>& prev, const std::vector<cplx>& next) {
    if (prev.size() != next.size()) throw argument_error("unitary dimensions differ");
    const std::size_t n = prev.size();
    std::size_t dim = 1;
    while (dim * dim < n) dim <<= 1;
    if (dim * dim != n) throw argument_error("matrix is not a power-of-two square");
    cplx overlap{};
    for (std::size_t i = 0; i < n; ++i) overlap += std::conj(prev[i]) * next[i];
    const double max_sq = 2.0 * static_cast<double>(dim);  // 2^(k+1)
    return std::sqrt(std::max(0.0, max_sq - 2.0 * std::abs(overlap))) / std::sqrt(max_sq);
}

freeze_metric metric_from_string(const std::string& name) {
    if (name == "parameter") return freeze_metric::parameter;
    if (name == "unitary_norm") return freeze_metric::unitary_norm;
    throw config_error("unknown freezing metric: " + name);
}

std::string metric_to_string(freeze_metric m) {
    return m == freeze_metric::parameter ? "parameter" : "unitary_norm";
}

double param_distance(const gate_param& prev, const gate_param& next,
                      ansatz::generator_kind gen, freeze_metric metric) {
    if (prev.k != next.k) throw argument_error("parameter variants differ");
    if (metric == freeze_metric::unitary_norm)
        return unitary_distance(ansatz::gate_unitary(prev, gen), ansatz::gate_unitary(next, gen));
    switch (prev.k) {
        case gate_param::kind::angle:
            return angle_distance(prev.v[0], next.v[0]);
        case gate_param::kind::axis:
            return quaternion_distance({0.0, prev.v[0], prev.v[1], prev.v[2]},
                                       {0.0, next.v[0], next.v[1], next.v[2]});
        default:
            return quaternion_distance(prev.v, next.v);
    }
}

freeze_state::freeze_state(int n_slots, const freeze_config& config)
    : frozen_remaining(n_slots, 0),
      kappa(n_slots, config.mode == freeze_mode::fixed ? config.kappa : 1) {
    if (n_slots < 1) throw argument_error("freeze state needs at least one slot");
    if (config.mode == freeze_mode::fixed && config.kappa < 1)
        throw config_error("fixed freezing needs kappa >= 1");
    if (!(config.threshold >= 0.0) || !std::isfinite(config.threshold))
        throw config_error("freezing threshold must be finite and >= 0");
}

bool freeze_state::should_optimize(int slot) const {
    return frozen_remaining.at(slot) == 0;
}

void freeze_state::record_update(int slot, double distance, const freeze_config& config,
                                 int sweep) {
    if (distance < 0.0) throw argument_error("distance must be >= 0");
    if (distance < config.threshold) {
        frozen_remaining.at(slot) = kappa.at(slot);
        event_log.push_back({sweep, slot, distance, kappa.at(slot)});
        if (config.mode == freeze_mode::incremental) ++kappa.at(slot);
    }
}

void freeze_state::sweep_tick() {
    for (int& r : frozen_remaining)
        if (r > 0) --r;
}

}  // namespace fq::freezing
