#include "netenergy/network.hpp"

#include <cmath>
#include <utility>

namespace netenergy {

NodeSystem make_node_system(RealMatrix a1, RealMatrix b1, RealMatrix c1) {
    if (!a1.is_square()) throw DimensionMismatch("node system: A1 must be square");
    if (b1.rows() != a1.rows()) throw DimensionMismatch("node system: B1 row count mismatch");
    if (c1.cols() != a1.rows()) throw DimensionMismatch("node system: C1 column count mismatch");
    if (b1.cols() != c1.rows())
        throw DimensionMismatch("node system: B1*C1 inner coupling needs as many inputs as outputs");
    if (!a1.all_finite() || !b1.all_finite() || !c1.all_finite())
        throw Error("node system: non-finite entries");
    NodeSystem node;
    node.a12 = b1 * c1;
    node.a1 = std::move(a1);
    node.b1 = std::move(b1);
    node.c1 = std::move(c1);
    return node;
}

NetworkRealization assemble(const NodeSystem& node, const RealMatrix& gamma, IoShape shape) {
    if (!gamma.is_square()) throw DimensionMismatch("assemble: coupling matrix must be square");
    const std::size_t n_nodes = gamma.rows();
    const RealMatrix eye = RealMatrix::identity(n_nodes);

    NetworkRealization net;
    net.node_count = n_nodes;
    net.shape = shape;
    net.a = kron(eye, node.a1) + kron(gamma, node.a12);
    if (shape == IoShape::ColumnRow) {
        RealMatrix ones_col(n_nodes, 1, 1.0);
        net.b = kron(ones_col, node.b1);
        net.c = kron(ones_col.transpose(), node.c1);
    } else {
        net.b = kron(eye, node.b1);
        net.c = kron(eye, node.c1);
    }
    return net;
}

std::vector<std::complex<double>> distinct_values(const Spectrum& sp, double tol) {
    std::vector<std::complex<double>> reps;
    for (const auto& v : sp.values) {
        bool seen = false;
        for (const auto& r : reps)
            if (std::abs(v - r) <= tol) {
                seen = true;
                break;
            }
        if (!seen) reps.push_back(v);
    }
    return reps;
}

bool stable_by_coupling_spectrum(const NodeSystem& node, const RealMatrix& gamma) {
    if (!gamma.is_square()) throw DimensionMismatch("coupling matrix must be square");
    constexpr double dedup_tol = 1e-8;
    const auto lambdas = distinct_values(eigenvalues(gamma), dedup_tol);
    for (const auto& lambda : lambdas) {
        const RealMatrix shifted = node.a1 + lambda.real() * node.a12;
        if (std::abs(lambda.imag()) <= dedup_tol) {
            if (!is_hurwitz(shifted)) return false;
        } else {
            const RealMatrix imag_part = lambda.imag() * node.a12;
            if (!is_hurwitz(complex_embedding(shifted, imag_part))) return false;
        }
    }
    return true;
}

namespace {

// J_k with 1 on the diagonal and 2 on the superdiagonal.
RealMatrix jordan_block_two(std::size_t k) {
    RealMatrix j = RealMatrix::identity(k);
    for (std::size_t i = 0; i + 1 < k; ++i) j(i, i + 1) = 2.0;
    return j;
}

// Output weights for a Jordan chain of length k: (2, 0, 2, -4, 8, ...),
// the tail alternating in sign and doubling.
std::vector<double> output_weights(std::size_t k) {
    std::vector<double> c = {2.0, 0.0};
    double mag = 2.0;
    for (std::size_t m = 3; m <= k; ++m) {
        c.push_back(m % 2 == 1 ? mag : -mag);
        mag *= 2.0;
    }
    c.resize(k);
    return c;
}

// Input weights grow by adjacent sums between fixed endpoints:
// (2,1) -> (2,3,1) -> (2,5,4,1) -> ...
std::vector<double> input_weights_even(std::size_t k) {
    std::vector<double> b = {2.0, 1.0};
    while (b.size() < k) {
        std::vector<double> next;
        next.push_back(2.0);
        for (std::size_t i = 0; i + 1 < b.size(); ++i) next.push_back(b[i] + b[i + 1]);
        next.push_back(1.0);
        b = std::move(next);
    }
    return b;
}

// Odd case: the Jordan-chain part has endpoints (2, ..., 2) and grows the
// same way; a trailing unit weight feeds the zero-eigenvalue block.
std::vector<double> input_weights_odd(std::size_t chain_len) {
    std::vector<double> b = {2.0, 2.0};
    while (b.size() < chain_len) {
        std::vector<double> next;
        next.push_back(2.0);
        for (std::size_t i = 0; i + 1 < b.size(); ++i) next.push_back(b[i] + b[i + 1]);
        next.push_back(2.0);
        b = std::move(next);
    }
    b.push_back(1.0);
    return b;
}

RealMatrix stack_input(const NodeSystem& node, const std::vector<double>& weights) {
    const std::size_t n = node.state_dim(), m = node.b1.cols();
    RealMatrix b(weights.size() * n, m);
    for (std::size_t k = 0; k < weights.size(); ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) b(k * n + i, j) = weights[k] * node.b1(i, j);
    return b;
}

RealMatrix stack_output(const NodeSystem& node, const std::vector<double>& weights) {
    const std::size_t n = node.state_dim(), l = node.c1.rows();
    RealMatrix c(l, weights.size() * n);
    for (std::size_t k = 0; k < weights.size(); ++k)
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < n; ++j) c(i, k * n + j) = weights[k] * node.c1(i, j);
    return c;
}

}  // namespace

NetworkRealization reduce_even(const NodeSystem& node, std::size_t n) {
    if (n < 4 || n % 2 != 0)
        throw DimensionMismatch("reduce_even: n must be even and >= 4");
    const std::size_t k = n / 2;
    NetworkRealization net;
    net.node_count = k;
    net.shape = IoShape::ColumnRow;
    net.a = kron(RealMatrix::identity(k), node.a1) + kron(jordan_block_two(k), node.a12);
    net.b = stack_input(node, input_weights_even(k));
    net.c = stack_output(node, output_weights(k));
    return net;
}

NetworkRealization reduce_odd(const NodeSystem& node, std::size_t n) {
    if (n < 5 || n % 2 != 1)
        throw DimensionMismatch("reduce_odd: n must be odd and >= 5");
    const std::size_t k = (n - 1) / 2;
    // diag(J_k, 0) in the coupling slot: the zero eigenvalue contributes a
    // bare A1 block.
    RealMatrix coupling(k + 1, k + 1);
    const RealMatrix j = jordan_block_two(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t jj = 0; jj < k; ++jj) coupling(i, jj) = j(i, jj);

    std::vector<double> c_weights = output_weights(k);
    c_weights.push_back(k % 2 == 0 ? 1.0 : -1.0);  // (-1)^((n-1)/2)

    NetworkRealization net;
    net.node_count = k + 1;
    net.shape = IoShape::ColumnRow;
    net.a = kron(RealMatrix::identity(k + 1), node.a1) + kron(coupling, node.a12);
    net.b = stack_input(node, input_weights_odd(k));
    net.c = stack_output(node, c_weights);
    return net;
}

}  // namespace netenergy
