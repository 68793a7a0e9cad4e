#include <doctest.h>

#include <algorithm>

#include "netenergy/matrix.hpp"
#include "test_support.hpp"

using namespace netenergy;
using test_support::make_rng;
using test_support::random_matrix;

TEST_CASE("kron identity block-diagonal case") {
    const RealMatrix m{{1.0, 2.0}, {3.0, 4.0}};
    const RealMatrix k = kron(RealMatrix::identity(2), m);
    const RealMatrix expect{{1, 2, 0, 0}, {3, 4, 0, 0}, {0, 0, 1, 2}, {0, 0, 3, 4}};
    CHECK(test_support::max_abs_diff(k, expect) == 0.0);
}

TEST_CASE("kron column vector case") {
    const RealMatrix k = kron(RealMatrix{{1.0}, {1.0}}, RealMatrix{{0.5}});
    REQUIRE(k.rows() == 2);
    REQUIRE(k.cols() == 1);
    CHECK(k(0, 0) == 0.5);
    CHECK(k(1, 0) == 0.5);
}

TEST_CASE("kron mixed-product property") {
    auto rng = make_rng(101);
    for (int rep = 0; rep < 25; ++rep) {
        const std::size_t p = 2 + rep % 3, q = 2 + (rep + 1) % 3, r = 2 + (rep + 2) % 3,
                          s = 2 + rep % 2;
        const RealMatrix a = random_matrix(rng, p, q);
        const RealMatrix c = random_matrix(rng, q, r);
        const RealMatrix b = random_matrix(rng, r, s);
        const RealMatrix d = random_matrix(rng, s, p);
        const RealMatrix lhs = kron(a, b) * kron(c, d);
        const RealMatrix rhs = kron(a * c, b * d);
        CHECK(test_support::max_abs_diff(lhs, rhs) <= 1e-10);
    }
}

TEST_CASE("solve_linear identity and diagonal cases") {
    const RealMatrix rhs{{1.0, 2.0}, {3.0, 4.0}, {5.0, 6.0}};
    CHECK(test_support::max_abs_diff(solve_linear(RealMatrix::identity(3), rhs), rhs) == 0.0);

    const RealMatrix x = solve_linear(RealMatrix{{2.0, 0.0}, {0.0, 4.0}}, RealMatrix{{2.0}, {8.0}});
    CHECK(x(0, 0) == doctest::Approx(1.0));
    CHECK(x(1, 0) == doctest::Approx(2.0));
}

TEST_CASE("solve_linear residual bound on random well-conditioned systems") {
    auto rng = make_rng(202);
    for (int rep = 0; rep < 100; ++rep) {
        RealMatrix m = random_matrix(rng, 10, 10);
        for (std::size_t i = 0; i < 10; ++i) m(i, i) += 5.0;  // diagonally dominant
        const RealMatrix rhs = random_matrix(rng, 10, 3);
        const RealMatrix x = solve_linear(m, rhs);
        const double resid = (m * x - rhs).frobenius_norm();
        CHECK(resid <= 1e-8 * (m.frobenius_norm() * x.frobenius_norm() + rhs.frobenius_norm()));
    }
}

TEST_CASE("solve_linear flags singular input") {
    CHECK_THROWS_AS(solve_linear(RealMatrix{{1.0, 2.0}, {2.0, 4.0}}, RealMatrix{{1.0}, {1.0}}),
                    SingularMatrix);
    CHECK_THROWS_AS(solve_linear(RealMatrix(2, 2, 0.0), RealMatrix{{1.0}, {1.0}}), SingularMatrix);
}

TEST_CASE("eigenvalues of a damped oscillator") {
    // roots of s^2 + 2.5 s + 4 by the quadratic formula
    const double re = -1.25;
    const double im = std::sqrt(4.0 - 1.25 * 1.25);
    const Spectrum sp = eigenvalues(RealMatrix{{0.0, 1.0}, {-4.0, -2.5}});
    REQUIRE(sp.values.size() == 2);
    auto v = sp.values;
    std::sort(v.begin(), v.end(), [](auto a, auto b) { return a.imag() < b.imag(); });
    CHECK(v[0].real() == doctest::Approx(re).epsilon(1e-10));
    CHECK(v[0].imag() == doctest::Approx(-im).epsilon(1e-10));
    CHECK(v[1].imag() == doctest::Approx(im).epsilon(1e-10));
}

TEST_CASE("eigenvalues of diagonal and rotation matrices") {
    const Spectrum d = eigenvalues(RealMatrix{{-1.0, 0.0}, {0.0, 3.0}});
    auto dv = d.values;
    std::sort(dv.begin(), dv.end(), [](auto a, auto b) { return a.real() < b.real(); });
    CHECK(dv[0] == std::complex<double>(-1.0, 0.0));
    CHECK(dv[1] == std::complex<double>(3.0, 0.0));

    // [[0,1],[-1,0]] has eigenvalues +-i
    const Spectrum r = eigenvalues(RealMatrix{{0.0, 1.0}, {-1.0, 0.0}});
    auto rv = r.values;
    std::sort(rv.begin(), rv.end(), [](auto a, auto b) { return a.imag() < b.imag(); });
    CHECK(rv[0].real() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(rv[0].imag() == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(rv[1].imag() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eigenvalues against known spectra under random similarity") {
    auto rng = make_rng(303);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = 3 + rep % 5;
        RealMatrix d(n, n);
        std::vector<double> expected;
        for (std::size_t i = 0; i < n; ++i) {
            d(i, i) = -3.0 + static_cast<double>(i) + 0.25 * (rep % 4);
            expected.push_back(d(i, i));
        }
        const RealMatrix t = test_support::random_similarity(rng, n);
        const RealMatrix m = t * d * test_support::inverse(t);
        auto sp = eigenvalues(m);
        std::vector<double> got;
        for (auto& z : sp.values) {
            CHECK(std::abs(z.imag()) <= 1e-7);
            got.push_back(z.real());
        }
        std::sort(got.begin(), got.end());
        std::sort(expected.begin(), expected.end());
        for (std::size_t i = 0; i < n; ++i)
            CHECK(got[i] == doctest::Approx(expected[i]).epsilon(1e-8));
    }
}

TEST_CASE("eigenvalue backward-error contract incl. defective matrices") {
    auto rng = make_rng(404);
    std::vector<RealMatrix> cases;
    // defective Jordan chain with superdiagonal 2, mildly rotated
    RealMatrix j = RealMatrix::identity(6);
    for (std::size_t i = 0; i + 1 < 6; ++i) j(i, i + 1) = 2.0;
    const RealMatrix t = test_support::random_similarity(rng, 6);
    cases.push_back(t * j * test_support::inverse(t));
    cases.push_back(random_matrix(rng, 8, 8, -2.0, 2.0));
    cases.push_back(random_matrix(rng, 12, 12, -1.0, 1.0));

    for (const auto& m : cases) {
        const Spectrum sp = eigenvalues(m);
        REQUIRE(sp.values.size() == m.rows());
        for (const auto& lambda : sp.values)
            CHECK(test_support::eigen_backward_error(m, lambda) <= sp.residual_tol);
    }
}

TEST_CASE("eigenvalues come in conjugate pairs") {
    auto rng = make_rng(505);
    for (int rep = 0; rep < 10; ++rep) {
        const RealMatrix m = random_matrix(rng, 7, 7, -2.0, 2.0);
        auto values = eigenvalues(m).values;
        for (const auto& z : values) {
            if (std::abs(z.imag()) < 1e-12) continue;
            const auto conj_it = std::find_if(values.begin(), values.end(), [&](auto w) {
                return std::abs(w - std::conj(z)) <= 1e-9 * std::max(1.0, std::abs(z));
            });
            CHECK(conj_it != values.end());
        }
    }
}

TEST_CASE("is_hurwitz basics") {
    CHECK(is_hurwitz(RealMatrix{{-4.5}}));
    CHECK_FALSE(is_hurwitz(RealMatrix{{0.0, 1.0}, {0.0, 0.0}}));
    // Example 2 node with lambda = +1: char poly s^2 + 0.5 s + 2
    CHECK(is_hurwitz(RealMatrix{{0.0, 1.0}, {-2.0, -0.5}}));
}

TEST_CASE("is_hurwitz is similarity invariant") {
    auto rng = make_rng(606);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = 2 + rep % 4;
        RealMatrix m = random_matrix(rng, n, n, -1.5, 1.5);
        // keep eigenvalues clear of the margin: shift decisively
        for (std::size_t i = 0; i < n; ++i) m(i, i) += (rep % 2 == 0) ? -4.0 : 4.0;
        const RealMatrix t = test_support::random_similarity(rng, n);
        const RealMatrix sim = t * m * test_support::inverse(t);
        CHECK(is_hurwitz(m) == is_hurwitz(sim));
    }
}

TEST_CASE("numeric_rank basics") {
    CHECK(numeric_rank(RealMatrix(4, 4, 0.0), 1e-8) == 0);
    CHECK(numeric_rank(RealMatrix::identity(5), 1e-8) == 5);
    const RealMatrix rect{{1.0, 2.0, 3.0}, {2.0, 4.0, 6.0}};
    CHECK(numeric_rank(rect, 1e-8) == 1);
}

TEST_CASE("real_schur factors the matrix") {
    auto rng = make_rng(707);
    for (int rep = 0; rep < 12; ++rep) {
        const std::size_t n = 2 + rep % 7;
        const RealMatrix m = random_matrix(rng, n, n, -2.0, 2.0);
        const RealSchur sf = real_schur(m);
        const RealMatrix recon = sf.u * sf.t * sf.u.transpose();
        CHECK((recon - m).frobenius_norm() <= 1e-12 * std::max(1.0, m.frobenius_norm()) * 100);
        const RealMatrix utu = sf.u.transpose() * sf.u;
        CHECK((utu - RealMatrix::identity(n)).frobenius_norm() <= 1e-13 * n * 10);
        // quasi-triangular: nothing below the first subdiagonal, no adjacent
        // 2x2 overlaps
        for (std::size_t i = 2; i < n; ++i)
            for (std::size_t jj = 0; jj + 1 < i; ++jj) CHECK(sf.t(i, jj) == 0.0);
        for (std::size_t i = 1; i + 1 < n; ++i)
            CHECK((sf.t(i, i - 1) == 0.0 || sf.t(i + 1, i) == 0.0));
    }
}

TEST_CASE("eigensolver torture: structured and pathological inputs") {
    auto rng = make_rng(808);

    SUBCASE("nilpotent shift matrix: every eigenvalue zero") {
        for (std::size_t n : {3, 8, 17}) {
            RealMatrix s(n, n);
            for (std::size_t i = 0; i + 1 < n; ++i) s(i, i + 1) = 1.0;
            for (const auto& z : eigenvalues(s).values) CHECK(std::abs(z) <= 1e-7);
        }
    }

    SUBCASE("cyclic permutation: roots of unity") {
        const std::size_t n = 12;
        RealMatrix p(n, n);
        for (std::size_t i = 0; i < n; ++i) p(i, (i + 1) % n) = 1.0;
        for (const auto& z : eigenvalues(p).values)
            CHECK(std::abs(std::abs(z) - 1.0) <= 1e-9);
    }

    SUBCASE("already triangular input deflates to its diagonal") {
        RealMatrix t(10, 10);
        for (std::size_t i = 0; i < 10; ++i)
            for (std::size_t j = i; j < 10; ++j)
                t(i, j) = (i == j) ? static_cast<double>(i) - 4.0 : 1.0;
        std::vector<double> got;
        for (const auto& z : eigenvalues(t).values) {
            CHECK(z.imag() == 0.0);
            got.push_back(z.real());
        }
        std::sort(got.begin(), got.end());
        for (std::size_t i = 0; i < 10; ++i)
            CHECK(got[i] == doctest::Approx(static_cast<double>(i) - 4.0).epsilon(1e-10));
    }

    SUBCASE("tight but distinct cluster stays resolved") {
        RealMatrix d(6, 6);
        for (std::size_t i = 0; i < 6; ++i) d(i, i) = 1.0 + 1e-3 * static_cast<double>(i);
        const RealMatrix t = test_support::random_similarity(rng, 6);
        const RealMatrix m = t * d * test_support::inverse(t);
        std::vector<double> got;
        for (const auto& z : eigenvalues(m).values) got.push_back(z.real());
        std::sort(got.begin(), got.end());
        for (std::size_t i = 0; i < 6; ++i)
            CHECK(got[i] == doctest::Approx(d(i, i)).epsilon(1e-6));
    }

    SUBCASE("largest supported dimension") {
        const RealMatrix m = random_matrix(rng, 64, 64, -1.0, 1.0);
        const Spectrum sp = eigenvalues(m);
        CHECK(sp.values.size() == 64);
        const RealSchur sf = real_schur(m);
        CHECK((sf.u * sf.t * sf.u.transpose() - m).frobenius_norm() <=
              1e-12 * m.frobenius_norm() * 1000);
    }

    SUBCASE("random sweep keeps counts, pairing and factorization") {
        for (int rep = 0; rep < 60; ++rep) {
            const std::size_t n = 1 + static_cast<std::size_t>(rep) % 24;
            RealMatrix m = random_matrix(rng, n, n, -3.0, 3.0);
            if (rep % 3 == 0) {  // make several rows identical: rank deficiency
                for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(0, j);
            }
            const Spectrum sp = eigenvalues(m);
            REQUIRE(sp.values.size() == n);
            std::complex<double> sum = 0.0;
            double trace = 0.0;
            for (const auto& z : sp.values) sum += z;
            for (std::size_t i = 0; i < n; ++i) trace += m(i, i);
            // eigenvalue sum equals the trace (well-conditioned identity)
            CHECK(std::abs(sum.imag()) <= 1e-8 * std::max(1.0, std::abs(trace)));
            CHECK(sum.real() == doctest::Approx(trace).epsilon(1e-8));
            const RealSchur sf = real_schur(m);
            CHECK((sf.u * sf.t * sf.u.transpose() - m).frobenius_norm() <=
                  1e-11 * std::max(1.0, m.frobenius_norm()));
        }
    }
}

TEST_CASE("Schur factorization of the hard non-normal network matrices") {
    // the couplings and the largest assembled drifts are the matrices the
    // Lyapunov path actually feeds through this code
    std::vector<RealMatrix> cases;
    {
        RealMatrix j = RealMatrix::identity(10);
        for (std::size_t i = 0; i + 1 < 10; ++i) j(i, i + 1) = 2.0;
        cases.push_back(j);
    }
    for (const auto& m : cases) {
        const RealSchur sf = real_schur(m);
        CHECK((sf.u * sf.t * sf.u.transpose() - m).frobenius_norm() <=
              1e-12 * std::max(1.0, m.frobenius_norm()) * 100);
        CHECK((sf.u.transpose() * sf.u - RealMatrix::identity(m.rows())).frobenius_norm() <= 1e-12);
    }
}

TEST_CASE("eigenvalues rejects oversized and non-square input") {
    CHECK_THROWS_AS(eigenvalues(RealMatrix(65, 65, 1.0)), DimensionMismatch);
    CHECK_THROWS_AS(eigenvalues(RealMatrix(2, 3, 1.0)), DimensionMismatch);
}
