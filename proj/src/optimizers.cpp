#include "optimizers.hpp"

#include <cmath>

namespace fq::optimizers {

using ansatz::gate_unitary;
using ansatz::generator_kind;
using ansatz::wrap_angle;
using simcore::gate2x2;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kConfirmTol = 1e-9;

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// arctan2 with the (0,0) degenerate case pinned to 0.
double atan2_or_zero(double y, double x) {
    if (y == 0.0 && x == 0.0) return 0.0;
    return std::atan2(y, x);
}

gate_param slot_param(const gate_eval_context& ctx) { return ctx.params[ctx.slot]; }

generator_kind slot_generator(const gate_eval_context& ctx) {
    return ctx.spec.slots[ctx.slot].gen;
}

double confirm_energy(const gate_eval_context& ctx, const gate_param& p) {
    const gate2x2 u = gate_unitary(p, slot_generator(ctx));
    const auto state = ansatz::run_circuit_substituted(ctx.spec, ctx.params, ctx.slot, u);
    if (ctx.counter) ++ctx.counter->confirmations;
    return simcore::expectation(state, ctx.obs);
}

}  // namespace

optimizer_kind optimizer_from_string(const std::string& name) {
    if (name == "rotosolve") return optimizer_kind::rotosolve;
    if (name == "fraxis") return optimizer_kind::fraxis;
    if (name == "fqs") return optimizer_kind::fqs;
    throw config_error("unknown optimizer: " + name);
}

std::string optimizer_to_string(optimizer_kind k) {
    switch (k) {
        case optimizer_kind::rotosolve: return "rotosolve";
        case optimizer_kind::fraxis: return "fraxis";
        default: return "fqs";
    }
}

double probe_energy(const gate_eval_context& ctx, const gate2x2& replacement) {
    const auto state = ansatz::run_circuit_substituted(ctx.spec, ctx.params, ctx.slot, replacement);
    if (ctx.counter) ++ctx.counter->probes;
    return simcore::expectation(state, ctx.obs);
}

eigen_pair symmetric_eigen_lowest(const sym_matrix& matrix) {
    const int k = matrix.k;
    if (k < 2) throw argument_error("eigensolver needs a matrix of order >= 2");
    sym_matrix a = matrix;
    for (int r = 0; r < k; ++r)
        for (int c = r + 1; c < k; ++c) {
            if (std::abs(a.at(r, c) - a.at(c, r)) >= 1e-10)
                throw argument_error("matrix is not symmetric");
            const double avg = 0.5 * (a.at(r, c) + a.at(c, r));
            a.at(r, c) = a.at(c, r) = avg;
        }

    std::vector<double> vecs(k * k, 0.0);  // columns are eigenvectors
    for (int i = 0; i < k; ++i) vecs[i * k + i] = 1.0;

    auto off_mass = [&] {
        double s = 0.0;
        for (int r = 0; r < k; ++r)
            for (int c = r + 1; c < k; ++c) s += 2.0 * a.at(r, c) * a.at(r, c);
        return std::sqrt(s);
    };

    int sweeps = 0;
    while (off_mass() >= 1e-14) {
        if (++sweeps > 200) throw numeric_error("jacobi eigensolver did not converge");
        for (int p = 0; p < k; ++p) {
            for (int q = p + 1; q < k; ++q) {
                const double apq = a.at(p, q);
                if (apq == 0.0) continue;
                const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                a.at(p, p) -= t * apq;
                a.at(q, q) += t * apq;
                a.at(p, q) = a.at(q, p) = 0.0;
                for (int r = 0; r < k; ++r) {
                    if (r != p && r != q) {
                        const double arp = a.at(r, p), arq = a.at(r, q);
                        a.at(r, p) = a.at(p, r) = arp - s * (arq + tau * arp);
                        a.at(r, q) = a.at(q, r) = arq + s * (arp - tau * arq);
                    }
                    const double vrp = vecs[r * k + p], vrq = vecs[r * k + q];
                    vecs[r * k + p] = vrp - s * (vrq + tau * vrp);
                    vecs[r * k + q] = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }

    int min_col = 0;
    for (int i = 1; i < k; ++i)
        if (a.at(i, i) < a.at(min_col, min_col)) min_col = i;

    eigen_pair out;
    out.value = a.at(min_col, min_col);
    out.vector.resize(k);
    for (int r = 0; r < k; ++r) out.vector[r] = vecs[r * k + min_col];
    double norm = 0.0;
    for (double x : out.vector) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : out.vector) x /= norm;
    for (double x : out.vector) {
        if (std::abs(x) > 1e-8) {
            if (x < 0.0)
                for (double& y : out.vector) y = -y;
            break;
        }
    }
    return out;
}

step_result rotosolve_step(const gate_eval_context& ctx) {
    if (slot_param(ctx).k != gate_param::kind::angle)
        throw argument_error("rotosolve step needs an angle parameter");
    const generator_kind gen = slot_generator(ctx);
    const double e0 = probe_energy(ctx, gate_unitary(gate_param::make_angle(0.0), gen));
    const double ep = probe_energy(ctx, gate_unitary(gate_param::make_angle(kPi / 2.0), gen));
    const double em = probe_energy(ctx, gate_unitary(gate_param::make_angle(-kPi / 2.0), gen));

    const double b = atan2_or_zero(2.0 * e0 - ep - em, ep - em);
    const double theta_star = wrap_angle(-kPi / 2.0 - b);

    const double c = 0.5 * (ep + em);
    const double amp = std::hypot(e0 - c, 0.5 * (ep - em));
    const double predicted = c - amp;

    step_result res;
    res.param = gate_param::make_angle(theta_star);
    res.energy = confirm_energy(ctx, res.param);
    if (std::abs(res.energy - predicted) >= kConfirmTol)
        throw numeric_error("rotosolve predicted minimum disagrees with re-evaluation");
    return res;
}

fraxis_moments measure_fraxis_moments(const gate_eval_context& ctx) {
    if (slot_param(ctx).k != gate_param::kind::axis)
        throw argument_error("fraxis step needs an axis parameter");
    auto probe_axis = [&](double nx, double ny, double nz) {
        return probe_energy(ctx, gate_unitary(gate_param::make_axis(nx, ny, nz),
                                              generator_kind::free_gate));
    };
    fraxis_moments m;
    m.r_x = probe_axis(1, 0, 0);
    m.r_y = probe_axis(0, 1, 0);
    m.r_z = probe_axis(0, 0, 1);
    m.r_xy = probe_axis(kInvSqrt2, kInvSqrt2, 0);
    m.r_xz = probe_axis(kInvSqrt2, 0, kInvSqrt2);
    m.r_yz = probe_axis(0, kInvSqrt2, kInvSqrt2);
    return m;
}

sym_matrix fraxis_matrix(const fraxis_moments& m) {
    sym_matrix a;
    a.k = 3;
    a.a = {2 * m.r_x, 2 * m.r_xy - m.r_x - m.r_y, 2 * m.r_xz - m.r_x - m.r_z,
           2 * m.r_xy - m.r_x - m.r_y, 2 * m.r_y, 2 * m.r_yz - m.r_y - m.r_z,
           2 * m.r_xz - m.r_x - m.r_z, 2 * m.r_yz - m.r_y - m.r_z, 2 * m.r_z};
    return a;
}

step_result fraxis_step(const gate_eval_context& ctx) {
    const fraxis_moments m = measure_fraxis_moments(ctx);
    const eigen_pair lowest = symmetric_eigen_lowest(fraxis_matrix(m));
    const double predicted = lowest.value / 2.0;

    step_result res;
    res.param = gate_param::make_axis(lowest.vector[0], lowest.vector[1], lowest.vector[2]);
    res.energy = confirm_energy(ctx, res.param);
    if (std::abs(res.energy - predicted) >= kConfirmTol)
        throw numeric_error("fraxis predicted minimum disagrees with re-evaluation");
    return res;
}

sym_matrix fqs_smatrix(const gate_eval_context& ctx) {
    if (slot_param(ctx).k != gate_param::kind::quaternion)
        throw argument_error("fqs step needs a quaternion parameter");
    auto probe_quat = [&](double q0, double q1, double q2, double q3) {
        return probe_energy(ctx, gate_unitary(gate_param::make_quaternion(q0, q1, q2, q3),
                                              generator_kind::free_gate));
    };
    sym_matrix s;
    s.k = 4;
    s.a.assign(16, 0.0);
    for (int mu = 0; mu < 4; ++mu) {
        double e[4] = {0, 0, 0, 0};
        e[mu] = 1.0;
        s.at(mu, mu) = probe_quat(e[0], e[1], e[2], e[3]);
    }
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = mu + 1; nu < 4; ++nu) {
            double q[4] = {0, 0, 0, 0};
            q[mu] = kInvSqrt2;
            q[nu] = kInvSqrt2;
            const double mix = probe_quat(q[0], q[1], q[2], q[3]);
            s.at(mu, nu) = s.at(nu, mu) = mix - 0.5 * (s.at(mu, mu) + s.at(nu, nu));
        }
    }
    return s;
}

step_result fqs_step(const gate_eval_context& ctx) {
    const sym_matrix s = fqs_smatrix(ctx);
    const eigen_pair lowest = symmetric_eigen_lowest(s);

    step_result res;
    res.param = gate_param::make_quaternion(lowest.vector[0], lowest.vector[1], lowest.vector[2],
                                            lowest.vector[3]);
    res.energy = confirm_energy(ctx, res.param);
    if (std::abs(res.energy - lowest.value) >= kConfirmTol)
        throw numeric_error("fqs predicted minimum disagrees with re-evaluation");
    return res;
}

step_result optimize_gate(const gate_eval_context& ctx) {
    switch (slot_param(ctx).k) {
        case gate_param::kind::angle: return rotosolve_step(ctx);
        case gate_param::kind::axis: return fraxis_step(ctx);
        default: return fqs_step(ctx);
    }
}

}  // namespace fq::optimizers
