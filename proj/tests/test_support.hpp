#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "netenergy/matrix.hpp"

namespace test_support {

using netenergy::RealMatrix;

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline RealMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    RealMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

// Product of n random Householder reflectors: an orthogonal matrix.
inline RealMatrix random_orthogonal(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> dist(0.0, 1.0);
    RealMatrix q = RealMatrix::identity(n);
    for (std::size_t rep = 0; rep < n; ++rep) {
        std::vector<double> v(n);
        double norm2 = 0.0;
        for (auto& vi : v) {
            vi = dist(rng);
            norm2 += vi * vi;
        }
        if (norm2 == 0.0) continue;
        // q <- q (I - 2 v v^T / v^T v)
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += q(i, j) * v[j];
            const double f = 2.0 * s / norm2;
            for (std::size_t j = 0; j < n; ++j) q(i, j) -= f * v[j];
        }
    }
    return q;
}

// Well-conditioned random similarity: U diag(s) V with singular values in
// [1, 5], so cond < 100 comfortably.
inline RealMatrix random_similarity(std::mt19937_64& rng, std::size_t n) {
    const RealMatrix u = random_orthogonal(rng, n);
    const RealMatrix v = random_orthogonal(rng, n);
    std::uniform_real_distribution<double> dist(1.0, 5.0);
    RealMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = dist(rng);
    return u * d * v;
}

// Inverse of a small matrix through the library solver.
inline RealMatrix inverse(const RealMatrix& m) {
    return netenergy::solve_linear(m, RealMatrix::identity(m.rows()));
}

// Upper bound on the smallest singular value: inverse iteration on M^T M
// using an explicit inverse (factored once). The return value ||M v|| is
// evaluated with the exact M for a unit vector v, so it can only
// overestimate sigma_min; a SingularMatrix from the factorization means
// sigma_min is numerically zero.
inline double smallest_singular_upper_bound(const RealMatrix& m, std::uint64_t seed = 12345) {
    const std::size_t n = m.rows();
    auto rng = make_rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    RealMatrix v(n, 1);
    for (std::size_t i = 0; i < n; ++i) v(i, 0) = dist(rng);
    RealMatrix inv;
    try {
        inv = netenergy::solve_linear(m, RealMatrix::identity(n));
    } catch (const netenergy::SingularMatrix&) {
        return 0.0;
    }
    const RealMatrix inv_t = inv.transpose();
    for (int it = 0; it < 50; ++it) {
        v = inv * (inv_t * v);
        const double norm = v.frobenius_norm();
        if (norm == 0.0) return 0.0;
        v = (1.0 / norm) * v;
    }
    return (m * v).frobenius_norm();
}

// sigma_min upper bound for the complex matrix (m - lambda I) via the real
// 2n x 2n embedding, whose singular values equal the complex ones.
inline double eigen_backward_error(const RealMatrix& m, std::complex<double> lambda) {
    const std::size_t n = m.rows();
    RealMatrix re = m, im(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        re(i, i) -= lambda.real();
        im(i, i) = -lambda.imag();
    }
    if (lambda.imag() == 0.0) return smallest_singular_upper_bound(re);
    return smallest_singular_upper_bound(netenergy::complex_embedding(re, im));
}

inline double max_abs_diff(const RealMatrix& a, const RealMatrix& b) {
    return (a - b).max_abs();
}

}  // namespace test_support
