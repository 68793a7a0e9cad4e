#pragma once

#include "netenergy/matrix.hpp"

namespace netenergy {

/// The outer-coupling families studied here. Custom carries an explicit
/// square matrix.
enum class CouplingFamily { Constructed, Diffusive, Antisymmetric, Custom };

struct CouplingKind {
    CouplingFamily family = CouplingFamily::Constructed;
    RealMatrix custom;  // used only when family == Custom

    static CouplingKind constructed() { return {CouplingFamily::Constructed, {}}; }
    static CouplingKind diffusive() { return {CouplingFamily::Diffusive, {}}; }
    static CouplingKind antisymmetric() { return {CouplingFamily::Antisymmetric, {}}; }
    static CouplingKind custom_matrix(RealMatrix m);
};

/// The constructed coupling: zero diagonal; below the diagonal, entry (i,j)
/// is -1 exactly when j <= i-2 and j is odd (1-based), +1 otherwise; the
/// upper triangle is all +1.
RealMatrix build_constructed(std::size_t n);

/// Same off-diagonal pattern with each diagonal entry set to the negated sum
/// of its row's off-diagonal entries, so every row sums to zero exactly.
RealMatrix build_diffusive(std::size_t n);

/// +1 strictly above the diagonal, -1 strictly below, zero diagonal.
RealMatrix build_antisymmetric(std::size_t n);

/// Materialize the coupling matrix for any family at size n.
RealMatrix coupling_matrix(const CouplingKind& kind, std::size_t n);

/// Closed-form spectrum (with algebraic multiplicities) for the constructed
/// and diffusive families, n >= 2. Throws UnsupportedKind otherwise.
Spectrum predicted_spectrum(const CouplingKind& kind, std::size_t n);

/// Rank-signature check of the constructed coupling's normal form for even
/// n: kernel dimensions of (G+I), (G-I) and (G-I)^(n/2) must be n/2, 1 and
/// n/2 -- a block of -1's plus a single Jordan chain at +1.
bool verify_jordan_structure(std::size_t n);

/// Greedy nearest-value multiset comparison: true iff every value of a can
/// be paired with a distinct value of b within tol (and the sizes match).
bool spectra_match(const Spectrum& a, const Spectrum& b, double tol);

}  // namespace netenergy
