#pragma once

#include <iosfwd>
#include <vector>

#include "netenergy/coupling.hpp"
#include "netenergy/network.hpp"

namespace netenergy {

/// Setup for the piecewise-linear Lur'e network simulation. The node drift
/// is A1 - 2*A12 with the nonlinearity B01*f1(C01*x_i) closing the loop;
/// the initial state is ic_scale * (one copy of b01 per node).
struct LureConfig {
    NodeSystem node;      // a12 must equal b01 * c01
    RealMatrix b01;       // n x 1
    RealMatrix c01;       // 1 x n
    CouplingKind coupling = CouplingKind::diffusive();
    std::size_t n_nodes = 1;
    double ic_scale = 1.0;
    double dt = 1e-3;            // seconds
    double t_end = 10.0;         // seconds
    std::size_t state_stride = 0;  // 0: keep no full-state snapshots
};

/// Example 2's node data wired as the default Lur'e node.
LureConfig default_lure_config();

/// Time-sampled regulated output, one sample per integration step.
struct Trajectory {
    std::vector<double> times;
    std::vector<double> z_values;
    std::vector<std::vector<double>> x_snapshots;  // every state_stride steps
    double dt = 0.0;
};

/// The Chua-type sector nonlinearity |y+1| - |y-1|, sector [0, 2].
double f1(double y);

/// Matrices of the network in state form: xdot = drift*x + input*f(y),
/// y = output_y * x, z = output_z * x.
struct LureMatrices {
    RealMatrix drift;
    RealMatrix input;
    RealMatrix output_y;
    RealMatrix output_z;
};
LureMatrices lure_system_matrices(const LureConfig& cfg);

/// Drift of the linearization at the origin: the slope-2 segment of f1
/// cancels the -2*A12 term, leaving I (x) A1 + Gamma (x) A12.
RealMatrix linearized_drift_matrix(const LureConfig& cfg);

/// Fixed-step classical RK4 integration of the nonlinear network. Throws
/// Divergence when ||x||_inf exceeds 1e12.
Trajectory simulate(const LureConfig& cfg);

/// Same integrator on the linearized network (no nonlinearity).
Trajectory simulate_linearized(const LureConfig& cfg);

/// Discrete L2 distance sqrt(sum (z_a - z_b)^2 * dt) over the full horizon.
double output_error(const Trajectory& a, const Trajectory& b);

/// H2 norm of the linearized network driven by its initial condition:
/// ||C2 (sI - I(x)A1 - Gamma(x)A12)^-1 (ic_scale * E (x) x1(0))||_2.
/// The squared value is the output energy of the unforced linear network.
double linearized_output_energy(const LureConfig& cfg);

/// CSV export, header "t,z", 12 significant digits, one row per stride steps.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj, std::size_t stride = 1);

/// Paired export with header "t,z,err" where err = z_a - z_b per sample.
void write_error_csv(std::ostream& out, const Trajectory& a, const Trajectory& b,
                     std::size_t stride = 1);

}  // namespace netenergy
