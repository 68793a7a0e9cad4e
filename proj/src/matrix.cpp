#include "netenergy/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace netenergy {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::size_t kMaxEigenDim = 64;
}  // namespace

RealMatrix::RealMatrix(std::initializer_list<std::initializer_list<double>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
        if (row.size() != cols_)
            throw DimensionMismatch("matrix literal has ragged rows");
        for (double v : row) {
            if (!std::isfinite(v))
                throw Error("matrix literal has a non-finite entry");
            data_.push_back(v);
        }
    }
}

RealMatrix RealMatrix::identity(std::size_t n) {
    RealMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

RealMatrix RealMatrix::transpose() const {
    RealMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

double RealMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
}

double RealMatrix::inf_norm() const {
    double best = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < cols_; ++j) s += std::abs((*this)(i, j));
        best = std::max(best, s);
    }
    return best;
}

double RealMatrix::max_abs() const {
    double best = 0.0;
    for (double v : data_) best = std::max(best, std::abs(v));
    return best;
}

bool RealMatrix::all_finite() const {
    for (double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

RealMatrix operator+(const RealMatrix& a, const RealMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatch("matrix addition: shape mismatch");
    RealMatrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
    return r;
}

RealMatrix operator-(const RealMatrix& a, const RealMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatch("matrix subtraction: shape mismatch");
    RealMatrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
    return r;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
    if (a.cols_ != b.rows_)
        throw DimensionMismatch("matrix product: inner dimensions differ");
    RealMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

RealMatrix operator*(double s, const RealMatrix& a) {
    RealMatrix r = a;
    for (double& v : r.data_) v *= s;
    return r;
}

RealMatrix kron(const RealMatrix& a, const RealMatrix& b) {
    RealMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const double aij = a(i, j);
            if (aij == 0.0) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    r(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
    return r;
}

RealMatrix complex_embedding(const RealMatrix& re, const RealMatrix& im) {
    if (re.rows() != im.rows() || re.cols() != im.cols())
        throw DimensionMismatch("complex_embedding: shape mismatch");
    const std::size_t n = re.rows(), m = re.cols();
    RealMatrix r(2 * n, 2 * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            r(i, j) = re(i, j);
            r(i, m + j) = -im(i, j);
            r(n + i, j) = im(i, j);
            r(n + i, m + j) = re(i, j);
        }
    return r;
}

// ---------------------------------------------------------------------------
// LU solve
// ---------------------------------------------------------------------------

RealMatrix solve_linear(const RealMatrix& m, const RealMatrix& rhs) {
    if (!m.is_square())
        throw DimensionMismatch("solve_linear: coefficient matrix must be square");
    if (rhs.rows() != m.rows())
        throw DimensionMismatch("solve_linear: rhs row count mismatch");
    const std::size_t n = m.rows();
    const double threshold = 1e-12 * m.inf_norm();

    RealMatrix lu = m;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(lu(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(lu(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best <= threshold)
            throw SingularMatrix("solve_linear: pivot below singularity threshold");
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
            std::swap(perm[k], perm[piv]);
        }
        const double pivot = lu(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = lu(i, k) / pivot;
            lu(i, k) = f;
            if (f == 0.0) continue;
            for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
        }
    }

    RealMatrix x(n, rhs.cols());
    std::vector<double> col(n);
    for (std::size_t c = 0; c < rhs.cols(); ++c) {
        for (std::size_t i = 0; i < n; ++i) col[i] = rhs(perm[i], c);
        for (std::size_t i = 1; i < n; ++i) {
            double s = col[i];
            for (std::size_t k = 0; k < i; ++k) s -= lu(i, k) * col[k];
            col[i] = s;
        }
        for (std::size_t ii = n; ii-- > 0;) {
            double s = col[ii];
            for (std::size_t k = ii + 1; k < n; ++k) s -= lu(ii, k) * col[k];
            col[ii] = s / lu(ii, ii);
        }
        for (std::size_t i = 0; i < n; ++i) x(i, c) = col[i];
    }
    if (!x.all_finite())
        throw SingularMatrix("solve_linear: non-finite solution");
    return x;
}

// ---------------------------------------------------------------------------
// Rank
// ---------------------------------------------------------------------------

std::size_t numeric_rank(const RealMatrix& m, double tol) {
    if (tol <= 0.0) throw Error("numeric_rank: tol must be positive");
    RealMatrix w = m;
    const std::size_t r = w.rows(), c = w.cols();
    const double threshold = tol * m.inf_norm() * static_cast<double>(std::max(r, c));
    const std::size_t steps = std::min(r, c);
    std::size_t rank = 0;
    for (std::size_t s = 0; s < steps; ++s) {
        // complete pivoting over the remaining submatrix
        std::size_t pi = s, pj = s;
        double best = 0.0;
        for (std::size_t i = s; i < r; ++i)
            for (std::size_t j = s; j < c; ++j) {
                const double v = std::abs(w(i, j));
                if (v > best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best <= threshold) break;
        if (pi != s)
            for (std::size_t j = 0; j < c; ++j) std::swap(w(s, j), w(pi, j));
        if (pj != s)
            for (std::size_t i = 0; i < r; ++i) std::swap(w(i, s), w(i, pj));
        ++rank;
        const double pivot = w(s, s);
        for (std::size_t i = s + 1; i < r; ++i) {
            const double f = w(i, s) / pivot;
            if (f == 0.0) continue;
            for (std::size_t j = s; j < c; ++j) w(i, j) -= f * w(s, j);
        }
    }
    return rank;
}

// ---------------------------------------------------------------------------
// Eigenvalues / real Schur form
// ---------------------------------------------------------------------------

namespace {

// Householder similarity reduction to upper Hessenberg form. When u is
// non-null it receives the accumulated orthogonal transform (a_in = U H U^T).
void hessenberg_reduce(RealMatrix& a, RealMatrix* u) {
    const std::size_t n = a.rows();
    if (u) *u = RealMatrix::identity(n);
    if (n < 3) return;
    std::vector<double> v(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double norm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) norm2 += a(i, k) * a(i, k);
        const double norm = std::sqrt(norm2);
        if (norm == 0.0) continue;
        const double beta = a(k + 1, k) >= 0.0 ? -norm : norm;
        v[k + 1] = a(k + 1, k) - beta;
        for (std::size_t i = k + 2; i < n; ++i) v[i] = a(i, k);
        double vtv = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) vtv += v[i] * v[i];
        if (vtv == 0.0) continue;
        const double two_over = 2.0 / vtv;
        // left: A <- (I - 2 v v^T / v^T v) A, rows k+1..n-1
        for (std::size_t j = k; j < n; ++j) {
            double s = 0.0;
            for (std::size_t i = k + 1; i < n; ++i) s += v[i] * a(i, j);
            const double f = s * two_over;
            for (std::size_t i = k + 1; i < n; ++i) a(i, j) -= f * v[i];
        }
        // right: A <- A (I - 2 v v^T / v^T v), cols k+1..n-1
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) s += a(i, j) * v[j];
            const double f = s * two_over;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * v[j];
        }
        if (u) {
            for (std::size_t i = 0; i < n; ++i) {
                double s = 0.0;
                for (std::size_t j = k + 1; j < n; ++j) s += (*u)(i, j) * v[j];
                const double f = s * two_over;
                for (std::size_t j = k + 1; j < n; ++j) (*u)(i, j) -= f * v[j];
            }
        }
        a(k + 1, k) = beta;
        for (std::size_t i = k + 2; i < n; ++i) a(i, k) = 0.0;
    }
}

// Francis double-shift QR on an upper Hessenberg matrix (0-based port of the
// classic EISPACK hqr/hqr2 routine). Eigenvalues land in the returned vector.
// When z is non-null, transformations are accumulated into z and h is kept
// full so that on exit h is the (quasi-triangular) Schur factor.
std::vector<std::complex<double>> francis_qr(RealMatrix& h, RealMatrix* z) {
    const int n = static_cast<int>(h.rows());
    const bool want_schur = z != nullptr;
    std::vector<std::complex<double>> w(static_cast<std::size_t>(n));

    double anorm = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(h(i, j));
    if (anorm == 0.0) return w;  // zero matrix

    int nn = n - 1;
    double t = 0.0;
    double p = 0.0, q = 0.0, r = 0.0, x = 0.0, y = 0.0, zz = 0.0, s = 0.0, wprod = 0.0;
    int total_its = 0;
    const int budget = 30 * n;  // EISPACK-style total budget across deflations
    while (nn >= 0) {
        int its = 0;
        int l;
        do {
            for (l = nn; l > 0; --l) {
                s = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
                if (s == 0.0) s = anorm;
                if (std::abs(h(l, l - 1)) <= kEps * s) {
                    h(l, l - 1) = 0.0;
                    break;
                }
            }
            x = h(nn, nn);
            if (l == nn) {  // one root found
                h(nn, nn) = x + t;
                w[nn] = {h(nn, nn), 0.0};
                --nn;
            } else {
                y = h(nn - 1, nn - 1);
                wprod = h(nn, nn - 1) * h(nn - 1, nn);
                if (l == nn - 1) {  // two roots found
                    p = 0.5 * (y - x);
                    q = p * p + wprod;
                    zz = std::sqrt(std::abs(q));
                    h(nn, nn) = x + t;
                    x = h(nn, nn);
                    h(nn - 1, nn - 1) = y + t;
                    if (q >= 0.0) {  // real pair
                        zz = p + (p >= 0.0 ? zz : -zz);
                        w[nn - 1] = w[nn] = {x + zz, 0.0};
                        if (zz != 0.0) w[nn] = {x - wprod / zz, 0.0};
                    } else {  // complex conjugate pair
                        w[nn] = {x + p, zz};
                        w[nn - 1] = std::conj(w[nn]);
                    }
                    nn -= 2;
                } else {  // no convergence yet; do a QR sweep
                    if (total_its >= budget)
                        throw ConvergenceFailure("eigenvalues: QR iteration budget exhausted");
                    ++total_its;
                    if (its > 0 && its % 10 == 0) {  // exceptional shift
                        t += x;
                        for (int i = 0; i <= nn; ++i) h(i, i) -= x;
                        s = std::abs(h(nn, nn - 1)) + std::abs(h(nn - 1, nn - 2));
                        y = x = 0.75 * s;
                        wprod = -0.4375 * s * s;
                    }
                    ++its;
                    int m;
                    for (m = nn - 2; m >= l; --m) {
                        zz = h(m, m);
                        r = x - zz;
                        s = y - zz;
                        p = (r * s - wprod) / h(m + 1, m) + h(m, m + 1);
                        q = h(m + 1, m + 1) - zz - r - s;
                        r = h(m + 2, m + 1);
                        s = std::abs(p) + std::abs(q) + std::abs(r);
                        p /= s;
                        q /= s;
                        r /= s;
                        if (m == l) break;
                        const double u1 = std::abs(h(m, m - 1)) * (std::abs(q) + std::abs(r));
                        const double v1 =
                            std::abs(p) *
                            (std::abs(h(m - 1, m - 1)) + std::abs(zz) + std::abs(h(m + 1, m + 1)));
                        if (u1 <= kEps * v1) break;
                    }
                    for (int i = m + 2; i <= nn; ++i) {
                        h(i, i - 2) = 0.0;
                        if (i != m + 2) h(i, i - 3) = 0.0;
                    }
                    for (int k = m; k <= nn - 1; ++k) {  // double QR step
                        if (k != m) {
                            p = h(k, k - 1);
                            q = h(k + 1, k - 1);
                            r = (k != nn - 1) ? h(k + 2, k - 1) : 0.0;
                            x = std::abs(p) + std::abs(q) + std::abs(r);
                            if (x != 0.0) {
                                p /= x;
                                q /= x;
                                r /= x;
                            }
                        }
                        s = std::sqrt(p * p + q * q + r * r);
                        if (p < 0.0) s = -s;
                        if (s != 0.0) {
                            if (k == m) {
                                if (l != m) h(k, k - 1) = -h(k, k - 1);
                            } else {
                                h(k, k - 1) = -s * x;
                            }
                            p += s;
                            x = p / s;
                            y = q / s;
                            zz = r / s;
                            q /= p;
                            r /= p;
                            const int jmax = want_schur ? n - 1 : nn;
                            for (int j = k; j <= jmax; ++j) {  // row modification
                                p = h(k, j) + q * h(k + 1, j);
                                if (k != nn - 1) {
                                    p += r * h(k + 2, j);
                                    h(k + 2, j) -= p * zz;
                                }
                                h(k + 1, j) -= p * y;
                                h(k, j) -= p * x;
                            }
                            const int mmin = nn < k + 3 ? nn : k + 3;
                            const int imin = want_schur ? 0 : l;
                            for (int i = imin; i <= mmin; ++i) {  // column modification
                                p = x * h(i, k) + y * h(i, k + 1);
                                if (k != nn - 1) {
                                    p += zz * h(i, k + 2);
                                    h(i, k + 2) -= p * r;
                                }
                                h(i, k + 1) -= p * q;
                                h(i, k) -= p;
                            }
                            if (want_schur) {  // accumulate transformations
                                for (int i = 0; i < n; ++i) {
                                    p = x * (*z)(i, k) + y * (*z)(i, k + 1);
                                    if (k != nn - 1) {
                                        p += zz * (*z)(i, k + 2);
                                        (*z)(i, k + 2) -= p * r;
                                    }
                                    (*z)(i, k + 1) -= p * q;
                                    (*z)(i, k) -= p;
                                }
                            }
                        }
                    }
                }
            }
        } while (l < nn - 1);
    }
    return w;
}

void require_eigen_input(const RealMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("eigenvalues: matrix must be square");
    if (m.rows() > kMaxEigenDim)
        throw DimensionMismatch("eigenvalues: dimension exceeds supported maximum of 64");
    if (!m.all_finite()) throw Error("eigenvalues: non-finite entries");
}

}  // namespace

Spectrum eigenvalues(const RealMatrix& m) {
    require_eigen_input(m);
    RealMatrix h = m;
    hessenberg_reduce(h, nullptr);
    Spectrum sp;
    sp.values = francis_qr(h, nullptr);
    sp.residual_tol = 1e-6 * std::max(1.0, m.frobenius_norm());
    return sp;
}

bool is_hurwitz(const RealMatrix& m) {
    const Spectrum sp = eigenvalues(m);
    for (const auto& lambda : sp.values)
        if (lambda.real() >= -kHurwitzMargin) return false;
    return true;
}

RealSchur real_schur(const RealMatrix& m) {
    require_eigen_input(m);
    RealSchur sf;
    sf.t = m;
    hessenberg_reduce(sf.t, &sf.u);
    francis_qr(sf.t, &sf.u);
    // scrub sub-Hessenberg fill that the sweeps never touch
    const std::size_t n = sf.t.rows();
    for (std::size_t i = 2; i < n; ++i)
        for (std::size_t j = 0; j + 1 < i; ++j) sf.t(i, j) = 0.0;
    return sf;
}

}  // namespace netenergy
