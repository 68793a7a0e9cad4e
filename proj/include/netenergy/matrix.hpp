#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "netenergy/errors.hpp"

namespace netenergy {

/// Dense real matrix, row-major storage, value semantics. Immutable in
/// spirit: every operation below returns a fresh matrix, so copies can be
/// shared across threads freely.
class RealMatrix {
public:
    RealMatrix() = default;

    RealMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    /// Construct from nested braces; rows must have equal length and all
    /// entries must be finite.
    RealMatrix(std::initializer_list<std::initializer_list<double>> init);

    static RealMatrix identity(std::size_t n);
    static RealMatrix zero(std::size_t rows, std::size_t cols) { return RealMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }
    bool is_square() const { return rows_ == cols_ && rows_ > 0; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<double>& data() const { return data_; }

    RealMatrix transpose() const;

    /// Frobenius norm.
    double frobenius_norm() const;
    /// Induced infinity norm (max absolute row sum).
    double inf_norm() const;
    /// Largest absolute entry.
    double max_abs() const;

    bool all_finite() const;

    friend RealMatrix operator+(const RealMatrix& a, const RealMatrix& b);
    friend RealMatrix operator-(const RealMatrix& a, const RealMatrix& b);
    friend RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);
    friend RealMatrix operator*(double s, const RealMatrix& a);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Multiset of eigenvalues of a real square matrix. Complex values occur in
/// conjugate pairs. residual_tol is the backward-error bound the values were
/// computed to: sigma_min(m - lambda*I) <= residual_tol for each lambda.
struct Spectrum {
    std::vector<std::complex<double>> values;
    double residual_tol = 0.0;
};

/// Kronecker product: block (i,j) of the result is a(i,j) * b.
RealMatrix kron(const RealMatrix& a, const RealMatrix& b);

/// Solve m * X = rhs by partial-pivot LU. Throws SingularMatrix when a pivot
/// falls below 1e-12 * ||m||_inf.
RealMatrix solve_linear(const RealMatrix& m, const RealMatrix& rhs);

/// Eigenvalues of a real square matrix (dimension <= 64) via Householder
/// Hessenberg reduction and Francis double-shift QR. The backward-error
/// contract is sigma_min(m - lambda*I) <= 1e-6 * max(1, ||m||_F); for a
/// defective matrix individual values can sit far from the exact multiple
/// eigenvalue even though the contract holds.
Spectrum eigenvalues(const RealMatrix& m);

/// True iff every eigenvalue satisfies Re(lambda) < -1e-9.
bool is_hurwitz(const RealMatrix& m);

/// Margin used by is_hurwitz.
inline constexpr double kHurwitzMargin = 1e-9;

/// Rank by complete-pivot elimination: number of pivots exceeding
/// tol * ||m||_inf * max(rows, cols).
std::size_t numeric_rank(const RealMatrix& m, double tol);

/// Real Schur decomposition m = u * t * u^T with u orthogonal and t upper
/// quasi-triangular (1x1 and 2x2 diagonal blocks; 2x2 blocks are not
/// standardized and may carry a real pair).
struct RealSchur {
    RealMatrix t;
    RealMatrix u;
};
RealSchur real_schur(const RealMatrix& m);

/// Real 2n x 2n representation of the complex matrix re + i*im:
/// [[re, -im], [im, re]]. Spectrum of the embedding is the union of the
/// spectra of re + i*im and its conjugate.
RealMatrix complex_embedding(const RealMatrix& re, const RealMatrix& im);

}  // namespace netenergy
