#include "netenergy/lure.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "netenergy/h2.hpp"

namespace netenergy {

double f1(double y) { return std::abs(y + 1.0) - std::abs(y - 1.0); }

LureConfig default_lure_config() {
    LureConfig cfg;
    cfg.b01 = RealMatrix{{0.0}, {1.0}};
    cfg.c01 = RealMatrix{{2.0, 2.0}};
    cfg.node = make_node_system(RealMatrix{{0.0, 1.0}, {-4.0, -2.5}}, cfg.b01, cfg.c01);
    return cfg;
}

namespace {

void validate(const LureConfig& cfg) {
    const std::size_t n = cfg.node.state_dim();
    if (cfg.b01.rows() != n || cfg.b01.cols() != 1)
        throw DimensionMismatch("lure config: b01 must be n x 1");
    if (cfg.c01.rows() != 1 || cfg.c01.cols() != n)
        throw DimensionMismatch("lure config: c01 must be 1 x n");
    const RealMatrix prod = cfg.b01 * cfg.c01;
    if ((cfg.node.a12 - prod).max_abs() > 1e-12 * std::max(1.0, prod.max_abs()))
        throw Error("lure config: node.a12 must equal b01 * c01");
    if (cfg.n_nodes == 0) throw DimensionMismatch("lure config: n_nodes must be positive");
    if (!(cfg.dt > 0.0)) throw Error("lure config: dt must be positive");
    if (cfg.dt > cfg.t_end) throw Error("lure config: dt must not exceed t_end");
    if (cfg.t_end / cfg.dt > 1e7) throw Error("lure config: more than 1e7 steps requested");
}

RealMatrix ic_vector(const LureConfig& cfg) {
    const std::size_t n = cfg.node.state_dim();
    RealMatrix ones(cfg.n_nodes, 1, 1.0);
    RealMatrix x0 = kron(ones, cfg.b01);
    for (std::size_t i = 0; i < cfg.n_nodes * n; ++i) x0(i, 0) *= cfg.ic_scale;
    return x0;
}

constexpr double kDivergenceGuard = 1e12;

// Shared fixed-step RK4 driver; `nonlinear` switches the Lur'e feedback on.
Trajectory integrate(const LureConfig& cfg, bool nonlinear) {
    validate(cfg);
    const std::size_t n = cfg.node.state_dim();
    const std::size_t dim = cfg.n_nodes * n;
    const RealMatrix gamma = coupling_matrix(cfg.coupling, cfg.n_nodes);

    const RealMatrix drift_mat =
        nonlinear ? kron(RealMatrix::identity(cfg.n_nodes),
                         cfg.node.a1 - 2.0 * cfg.node.a12) +
                        kron(gamma, cfg.node.a12)
                  : kron(RealMatrix::identity(cfg.n_nodes), cfg.node.a1) +
                        kron(gamma, cfg.node.a12);

    std::vector<double> b01(n), c01(n);
    for (std::size_t i = 0; i < n; ++i) {
        b01[i] = cfg.b01(i, 0);
        c01[i] = cfg.c01(0, i);
    }

    auto deriv = [&](const std::vector<double>& x, std::vector<double>& dx) {
        for (std::size_t i = 0; i < dim; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < dim; ++j) s += drift_mat(i, j) * x[j];
            dx[i] = s;
        }
        if (!nonlinear) return;
        for (std::size_t node = 0; node < cfg.n_nodes; ++node) {
            double y = 0.0;
            for (std::size_t j = 0; j < n; ++j) y += c01[j] * x[node * n + j];
            const double f = f1(y);
            for (std::size_t j = 0; j < n; ++j) dx[node * n + j] += b01[j] * f;
        }
    };

    auto regulated_output = [&](const std::vector<double>& x) {
        double z = 0.0;
        for (std::size_t node = 0; node < cfg.n_nodes; ++node)
            for (std::size_t j = 0; j < n; ++j) z += c01[j] * x[node * n + j];
        return z;
    };

    const std::size_t steps = static_cast<std::size_t>(std::llround(cfg.t_end / cfg.dt));
    Trajectory traj;
    traj.dt = cfg.dt;
    traj.times.reserve(steps + 1);
    traj.z_values.reserve(steps + 1);

    std::vector<double> x(dim);
    {
        const RealMatrix x0 = ic_vector(cfg);
        for (std::size_t i = 0; i < dim; ++i) x[i] = x0(i, 0);
    }
    std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);

    traj.times.push_back(0.0);
    traj.z_values.push_back(regulated_output(x));
    if (cfg.state_stride > 0) traj.x_snapshots.push_back(x);

    const double h = cfg.dt;
    for (std::size_t step = 1; step <= steps; ++step) {
        deriv(x, k1);
        for (std::size_t i = 0; i < dim; ++i) tmp[i] = x[i] + 0.5 * h * k1[i];
        deriv(tmp, k2);
        for (std::size_t i = 0; i < dim; ++i) tmp[i] = x[i] + 0.5 * h * k2[i];
        deriv(tmp, k3);
        for (std::size_t i = 0; i < dim; ++i) tmp[i] = x[i] + h * k3[i];
        deriv(tmp, k4);
        double max_abs = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            x[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            max_abs = std::max(max_abs, std::abs(x[i]));
        }
        if (max_abs > kDivergenceGuard)
            throw Divergence("simulate: state exceeded overflow guard (unstable or dt too large)");
        traj.times.push_back(static_cast<double>(step) * h);
        traj.z_values.push_back(regulated_output(x));
        if (cfg.state_stride > 0 && step % cfg.state_stride == 0) traj.x_snapshots.push_back(x);
    }
    return traj;
}

void require_same_grid(const Trajectory& a, const Trajectory& b) {
    if (a.times.size() != b.times.size())
        throw GridMismatch("output_error: trajectories have different lengths");
    for (std::size_t i = 0; i < a.times.size(); ++i)
        if (std::abs(a.times[i] - b.times[i]) > 1e-12)
            throw GridMismatch("output_error: trajectories sampled on different grids");
}

void write_row(std::ostream& out, std::initializer_list<double> values) {
    char buf[64];
    bool first = true;
    for (double v : values) {
        std::snprintf(buf, sizeof(buf), "%.12g", v);
        if (!first) out << ',';
        out << buf;
        first = false;
    }
    out << '\n';
}

}  // namespace

LureMatrices lure_system_matrices(const LureConfig& cfg) {
    validate(cfg);
    const RealMatrix gamma = coupling_matrix(cfg.coupling, cfg.n_nodes);
    const RealMatrix eye = RealMatrix::identity(cfg.n_nodes);
    RealMatrix ones_row(1, cfg.n_nodes, 1.0);
    LureMatrices m;
    m.drift = kron(eye, cfg.node.a1 - 2.0 * cfg.node.a12) + kron(gamma, cfg.node.a12);
    m.input = kron(eye, cfg.b01);
    m.output_y = kron(eye, cfg.c01);
    m.output_z = kron(ones_row, cfg.c01);
    return m;
}

RealMatrix linearized_drift_matrix(const LureConfig& cfg) {
    validate(cfg);
    const RealMatrix gamma = coupling_matrix(cfg.coupling, cfg.n_nodes);
    return kron(RealMatrix::identity(cfg.n_nodes), cfg.node.a1) + kron(gamma, cfg.node.a12);
}

Trajectory simulate(const LureConfig& cfg) { return integrate(cfg, true); }

Trajectory simulate_linearized(const LureConfig& cfg) { return integrate(cfg, false); }

double output_error(const Trajectory& a, const Trajectory& b) {
    require_same_grid(a, b);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.z_values.size(); ++i) {
        const double d = a.z_values[i] - b.z_values[i];
        sum += d * d;
    }
    return std::sqrt(sum * a.dt);
}

double linearized_output_energy(const LureConfig& cfg) {
    validate(cfg);
    const RealMatrix a = linearized_drift_matrix(cfg);
    RealMatrix ones_row(1, cfg.n_nodes, 1.0);
    const RealMatrix c2 = kron(ones_row, cfg.c01);
    const RealMatrix b_ic = ic_vector(cfg);
    return h2_norm(a, b_ic, c2).norm;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj, std::size_t stride) {
    if (stride == 0) stride = 1;
    out << "t,z\n";
    for (std::size_t i = 0; i < traj.times.size(); i += stride)
        write_row(out, {traj.times[i], traj.z_values[i]});
}

void write_error_csv(std::ostream& out, const Trajectory& a, const Trajectory& b,
                     std::size_t stride) {
    require_same_grid(a, b);
    if (stride == 0) stride = 1;
    out << "t,z,err\n";
    for (std::size_t i = 0; i < a.times.size(); i += stride)
        write_row(out, {a.times[i], a.z_values[i], a.z_values[i] - b.z_values[i]});
}

}  // namespace netenergy
