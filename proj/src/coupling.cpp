#include "netenergy/coupling.hpp"

#include <algorithm>
#include <cmath>

namespace netenergy {

CouplingKind CouplingKind::custom_matrix(RealMatrix m) {
    if (!m.is_square()) throw DimensionMismatch("custom coupling must be square");
    return {CouplingFamily::Custom, std::move(m)};
}

RealMatrix build_constructed(std::size_t n) {
    if (n == 0) throw DimensionMismatch("coupling size must be positive");
    RealMatrix g(n, n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            if (i == j) continue;
            const bool negative = i > j && j + 2 <= i && j % 2 == 1;
            g(i - 1, j - 1) = negative ? -1.0 : 1.0;
        }
    }
    return g;
}

RealMatrix build_diffusive(std::size_t n) {
    RealMatrix g = build_constructed(n);
    for (std::size_t i = 0; i < n; ++i) {
        double row_sum = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) row_sum += g(i, j);
        g(i, i) = -row_sum;
    }
    return g;
}

RealMatrix build_antisymmetric(std::size_t n) {
    if (n == 0) throw DimensionMismatch("coupling size must be positive");
    RealMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i < j)
                g(i, j) = 1.0;
            else if (i > j)
                g(i, j) = -1.0;
        }
    return g;
}

RealMatrix coupling_matrix(const CouplingKind& kind, std::size_t n) {
    switch (kind.family) {
        case CouplingFamily::Constructed: return build_constructed(n);
        case CouplingFamily::Diffusive: return build_diffusive(n);
        case CouplingFamily::Antisymmetric: return build_antisymmetric(n);
        case CouplingFamily::Custom:
            if (kind.custom.rows() != n)
                throw DimensionMismatch("custom coupling size disagrees with requested n");
            return kind.custom;
    }
    throw Error("coupling_matrix: unreachable");
}

Spectrum predicted_spectrum(const CouplingKind& kind, std::size_t n) {
    if (n < 2) throw DimensionMismatch("predicted_spectrum: n must be at least 2");
    Spectrum sp;
    sp.residual_tol = 0.0;
    if (kind.family == CouplingFamily::Constructed) {
        const std::size_t half = n / 2;
        for (std::size_t k = 0; k < half; ++k) sp.values.emplace_back(-1.0, 0.0);
        for (std::size_t k = 0; k < half; ++k) sp.values.emplace_back(1.0, 0.0);
        if (n % 2 == 1) sp.values.emplace_back(0.0, 0.0);
        return sp;
    }
    if (kind.family == CouplingFamily::Diffusive) {
        // -n once; -(n-2), ..., down to -3 (odd n) or -2 (even n), twice each;
        // -1 once when n is odd; 0 once.
        sp.values.emplace_back(-static_cast<double>(n), 0.0);
        const std::size_t lowest = (n % 2 == 1) ? 3 : 2;
        for (std::size_t k = n - 2; k + 1 >= lowest + 1; k -= 2) {
            sp.values.emplace_back(-static_cast<double>(k), 0.0);
            sp.values.emplace_back(-static_cast<double>(k), 0.0);
            if (k < lowest + 2) break;
        }
        if (n % 2 == 1) sp.values.emplace_back(-1.0, 0.0);
        sp.values.emplace_back(0.0, 0.0);
        return sp;
    }
    throw UnsupportedKind("predicted_spectrum: no closed form for this coupling family");
}

bool verify_jordan_structure(std::size_t n) {
    if (n < 2 || n % 2 != 0)
        throw DimensionMismatch("verify_jordan_structure: n must be even and >= 2");
    const double tol = 1e-8;
    const RealMatrix g = build_constructed(n);
    const RealMatrix eye = RealMatrix::identity(n);
    const RealMatrix g_plus = g + eye;
    const RealMatrix g_minus = g - eye;
    RealMatrix power = g_minus;
    for (std::size_t k = 1; k < n / 2; ++k) power = power * g_minus;

    const std::size_t rank_plus = numeric_rank(g_plus, tol);
    const std::size_t rank_minus = numeric_rank(g_minus, tol);
    const std::size_t rank_power = numeric_rank(power, tol);
    // kernel dims n/2, 1, n/2 respectively
    return rank_plus == n - n / 2 && rank_minus == n - 1 && rank_power == n - n / 2;
}

bool spectra_match(const Spectrum& a, const Spectrum& b, double tol) {
    if (a.values.size() != b.values.size()) return false;
    std::vector<std::complex<double>> pool = b.values;
    std::vector<bool> used(pool.size(), false);
    for (const auto& va : a.values) {
        double best = -1.0;
        std::size_t best_idx = 0;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (used[i]) continue;
            const double d = std::abs(va - pool[i]);
            if (best < 0.0 || d < best) {
                best = d;
                best_idx = i;
            }
        }
        if (best < 0.0 || best > tol) return false;
        used[best_idx] = true;
    }
    return true;
}

}  // namespace netenergy
