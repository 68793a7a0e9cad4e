#include "netenergy/h2.hpp"

#include <cmath>
#include <mutex>
#include <vector>

#include "netenergy/coupling.hpp"

namespace netenergy {

namespace {

std::mutex stats_mutex;
SolveStats global_stats;

void record_solve(double residual_ratio, double asymmetry_ratio) {
    std::lock_guard<std::mutex> lock(stats_mutex);
    global_stats.max_residual_ratio = std::max(global_stats.max_residual_ratio, residual_ratio);
    global_stats.max_asymmetry_ratio = std::max(global_stats.max_asymmetry_ratio, asymmetry_ratio);
    ++global_stats.solves;
}

// Diagonal block boundaries of an upper quasi-triangular matrix.
std::vector<std::pair<std::size_t, std::size_t>> schur_blocks(const RealMatrix& t) {
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    const std::size_t n = t.rows();
    std::size_t i = 0;
    while (i < n) {
        if (i + 1 < n && t(i + 1, i) != 0.0) {
            blocks.emplace_back(i, 2);
            i += 2;
        } else {
            blocks.emplace_back(i, 1);
            i += 1;
        }
    }
    return blocks;
}

// Solve the small Sylvester system Tii^T X + X Tjj = R (block sizes <= 2)
// through its Kronecker form.
void solve_small_block(const RealMatrix& t, std::size_t i0, std::size_t bi, std::size_t j0,
                       std::size_t bj, const RealMatrix& rhs, RealMatrix& y) {
    const std::size_t m = bi * bj;
    RealMatrix sys(m, m);
    RealMatrix vec(m, 1);
    // unknown X(p,q) has index p*bj + q; equation (p,q):
    // sum_r T(i0+r, i0+p) X(r,q) + sum_s X(p,s) T(j0+s, j0+q) = R(p,q)
    for (std::size_t p = 0; p < bi; ++p)
        for (std::size_t q = 0; q < bj; ++q) {
            const std::size_t row = p * bj + q;
            for (std::size_t r = 0; r < bi; ++r) sys(row, r * bj + q) += t(i0 + r, i0 + p);
            for (std::size_t s = 0; s < bj; ++s) sys(row, p * bj + s) += t(j0 + s, j0 + q);
            vec(row, 0) = rhs(p, q);
        }
    RealMatrix x;
    try {
        x = solve_linear(sys, vec);
    } catch (const SingularMatrix&) {
        throw SingularOperator("lyapunov_solve: singular diagonal block (eigenvalue pair sums to zero)");
    }
    for (std::size_t p = 0; p < bi; ++p)
        for (std::size_t q = 0; q < bj; ++q) y(i0 + p, j0 + q) = x(p * bj + q, 0);
}

// Y T + T^T Y + W = 0 for upper quasi-triangular T (Bartels-Stewart
// back-substitution over the block columns).
RealMatrix quasi_triangular_lyapunov(const RealMatrix& t, const RealMatrix& w) {
    const std::size_t n = t.rows();
    RealMatrix y(n, n);
    const auto blocks = schur_blocks(t);
    for (std::size_t jb = 0; jb < blocks.size(); ++jb) {
        const auto [j0, bj] = blocks[jb];
        for (std::size_t ib = 0; ib <= jb; ++ib) {
            const auto [i0, bi] = blocks[ib];
            RealMatrix rhs(bi, bj);
            for (std::size_t p = 0; p < bi; ++p)
                for (std::size_t q = 0; q < bj; ++q) {
                    // -W - (sum_{k<j} Y[i,k] T[k,j]) - (sum_{k<i} T[k,i]^T Y[k,j])
                    double acc = -w(i0 + p, j0 + q);
                    for (std::size_t k = 0; k < j0; ++k) acc -= y(i0 + p, k) * t(k, j0 + q);
                    for (std::size_t k = 0; k < i0; ++k) acc -= t(k, i0 + p) * y(k, j0 + q);
                    rhs(p, q) = acc;
                }
            solve_small_block(t, i0, bi, j0, bj, rhs, y);
            if (ib != jb)
                for (std::size_t p = 0; p < bi; ++p)
                    for (std::size_t q = 0; q < bj; ++q) y(j0 + q, i0 + p) = y(i0 + p, j0 + q);
        }
    }
    return y;
}

}  // namespace

SolveStats solve_stats() {
    std::lock_guard<std::mutex> lock(stats_mutex);
    return global_stats;
}

void reset_solve_stats() {
    std::lock_guard<std::mutex> lock(stats_mutex);
    global_stats = SolveStats{};
}

RealMatrix lyapunov_solve(const RealMatrix& a, const RealMatrix& w) {
    if (!a.is_square()) throw DimensionMismatch("lyapunov_solve: a must be square");
    if (w.rows() != a.rows() || w.cols() != a.cols())
        throw DimensionMismatch("lyapunov_solve: w shape mismatch");
    const double w_scale = w.frobenius_norm();
    if ((w - w.transpose()).frobenius_norm() > 1e-10 * std::max(1.0, w_scale))
        throw Error("lyapunov_solve: w must be symmetric");
    if (!is_hurwitz(a)) throw NotHurwitz("lyapunov_solve: a is not Hurwitz");

    const RealSchur schur = real_schur(a);
    const RealMatrix w_rot = schur.u.transpose() * w * schur.u;
    const RealMatrix y = quasi_triangular_lyapunov(schur.t, w_rot);
    RealMatrix q = schur.u * y * schur.u.transpose();

    const double q_norm = q.frobenius_norm();
    const double asym = q_norm > 0.0 ? (q - q.transpose()).frobenius_norm() / q_norm : 0.0;
    RealMatrix q_sym(q.rows(), q.cols());
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) q_sym(i, j) = 0.5 * (q(i, j) + q(j, i));

    const RealMatrix residual = q_sym * a + a.transpose() * q_sym + w;
    const double denom = q_sym.frobenius_norm() * a.frobenius_norm() + w.frobenius_norm();
    const double ratio = denom > 0.0 ? residual.frobenius_norm() / denom : 0.0;
    record_solve(ratio, asym);
    if (ratio > 1e-8)
        throw SingularOperator("lyapunov_solve: residual bound violated");
    return q_sym;
}

H2Result h2_norm(const RealMatrix& a, const RealMatrix& b, const RealMatrix& c) {
    if (b.rows() != a.rows()) throw DimensionMismatch("h2_norm: b row count mismatch");
    if (c.cols() != a.cols()) throw DimensionMismatch("h2_norm: c column count mismatch");
    const RealMatrix q = lyapunov_solve(a, c.transpose() * c);
    const RealMatrix btqb = b.transpose() * q * b;
    double trace = 0.0;
    for (std::size_t i = 0; i < btqb.rows(); ++i) trace += btqb(i, i);
    if (trace < 0.0) trace = 0.0;  // round-off guard; Q is PSD
    return {std::sqrt(trace), trace};
}

H2Result h2_norm(const NetworkRealization& r) { return h2_norm(r.a, r.b, r.c); }

double node_h2_norm(const NodeSystem& node) {
    return h2_norm(node.a1, node.b1, node.c1).norm;
}

double diffusive_norm_prediction(const NodeSystem& node, std::size_t n) {
    if (n == 0) throw DimensionMismatch("diffusive_norm_prediction: n must be positive");
    // stability list per the diffusive closed-form spectrum
    std::vector<double> lambdas;
    if (n == 1) {
        lambdas = {0.0};
    } else {
        const Spectrum pred = predicted_spectrum(CouplingKind::diffusive(), n);
        for (const auto& v : distinct_values(pred)) lambdas.push_back(v.real());
    }
    for (double lam : lambdas)
        if (!is_hurwitz(node.a1 + lam * node.a12))
            throw NotHurwitz("diffusive_norm_prediction: network unstable");
    return node_h2_norm(node) * static_cast<double>(n);
}

double antisym_first_order_prediction(const NodeSystem& node, std::size_t n_nodes) {
    if (node.state_dim() != 1)
        throw NotFirstOrder("antisym_first_order_prediction: node must be first-order");
    if (n_nodes == 0) throw DimensionMismatch("antisym_first_order_prediction: n_nodes must be positive");
    if (!stable_by_coupling_spectrum(node, build_antisymmetric(n_nodes)))
        throw NotHurwitz("antisym_first_order_prediction: network unstable");
    return node_h2_norm(node) * std::sqrt(static_cast<double>(n_nodes));
}

}  // namespace netenergy
