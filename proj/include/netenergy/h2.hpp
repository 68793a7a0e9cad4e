#pragma once

#include <cstdint>

#include "netenergy/matrix.hpp"
#include "netenergy/network.hpp"

namespace netenergy {

/// H2 norm of a realization: norm = sqrt(trace(B^T Q B)) with Q the
/// observability-type Lyapunov solution.
struct H2Result {
    double norm = 0.0;
    double gramian_trace_term = 0.0;  // trace(B^T Q B)
};

/// Running diagnostics over every Lyapunov solve since the last reset.
/// residual ratio: ||QA + A^T Q + W||_F / (||Q||_F ||A||_F + ||W||_F);
/// asymmetry ratio: ||Q - Q^T||_F / ||Q||_F before symmetrization.
struct SolveStats {
    double max_residual_ratio = 0.0;
    double max_asymmetry_ratio = 0.0;
    std::uint64_t solves = 0;
};

SolveStats solve_stats();
void reset_solve_stats();

/// Solve Q*a + a^T*Q + w = 0 for symmetric positive semidefinite Q.
/// a must be Hurwitz (NotHurwitz otherwise); w symmetric. Uses the real
/// Schur form of a and quasi-triangular back-substitution; the residual
/// bound 1e-8 * (||Q||_F ||a||_F + ||w||_F) is checked on every call and a
/// violation raises SingularOperator. Q is symmetrized before returning.
RealMatrix lyapunov_solve(const RealMatrix& a, const RealMatrix& w);

H2Result h2_norm(const RealMatrix& a, const RealMatrix& b, const RealMatrix& c);
H2Result h2_norm(const NetworkRealization& r);

/// H2 norm of the single node alone.
double node_h2_norm(const NodeSystem& node);

/// gamma2 * n for the diffusive ColumnRow network, after checking the
/// stability list A1 + lambda*A12 over the predicted diffusive spectrum.
double diffusive_norm_prediction(const NodeSystem& node, std::size_t n);

/// gamma2 * sqrt(n_nodes) for a first-order node under antisymmetric
/// coupling with block-diagonal I/O. Throws NotFirstOrder when the node
/// state dimension exceeds 1.
double antisym_first_order_prediction(const NodeSystem& node, std::size_t n_nodes);

}  // namespace netenergy
