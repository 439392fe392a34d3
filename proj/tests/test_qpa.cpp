#include <doctest.h>

#include <cmath>
#include <numbers>

#include "quditbraid/qpa.hpp"

using namespace quditbraid;

namespace {
const cd kOmega3 = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
}

TEST_CASE("roots of unity") {
    for (int d = 2; d <= 8; ++d) {
        const RootsOfUnity roots(d);
        CHECK(std::abs(roots.q_pow(d) - cd{1, 0}) <= 1e-12);
        for (int m = 1; m < d; ++m) CHECK(std::abs(roots.q_pow(m) - cd{1, 0}) > 0.1);
        if (d % 2 == 0) {
            CHECK(std::abs(roots.omega * roots.omega - roots.q) <= 1e-12);
        } else {
            CHECK(std::abs(roots.omega - roots.q) <= 1e-12);
        }
    }
}

TEST_CASE("generator X") {
    const ComplexMatrix x2 = generator_x(2);
    CHECK(matrix_residual(x2, ComplexMatrix(2, {0, 1, 1, 0})) == 0.0);

    const ComplexMatrix x3 = generator_x(3);
    CHECK(matrix_residual(x3, ComplexMatrix(3, {0, 1, 0, 0, 0, 1, 1, 0, 0})) == 0.0);

    CHECK(matrix_residual(generator_x(4).pow(4), ComplexMatrix::identity(4)) <= 1e-15);
    CHECK_THROWS_AS(generator_x(1), std::invalid_argument);
}

TEST_CASE("generator Z") {
    const ComplexMatrix z2 = generator_z(2);
    CHECK(matrix_residual(z2, ComplexMatrix(2, {1, 0, 0, -1})) <= 1e-15);

    const ComplexMatrix z3 = generator_z(3);
    CHECK(std::abs(z3.at(1, 1) - kOmega3) <= 1e-15);
    CHECK(std::abs(z3.at(2, 2) - kOmega3 * kOmega3) <= 1e-15);

    CHECK(matrix_residual(generator_z(5).pow(5), ComplexMatrix::identity(5)) <= 1e-14);
    CHECK_THROWS_AS(generator_z(1), std::invalid_argument);
}

TEST_CASE("fourier operator") {
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(matrix_residual(fourier(2), ComplexMatrix(2, {s, s, s, -s})) <= 1e-15);
    for (int d = 2; d <= 8; ++d) {
        const ComplexMatrix f = fourier(d);
        CHECK(unitarity_residual(f) <= 1e-12);
        CHECK(matrix_residual(generator_x(d), f.adjoint() * generator_z(d) * f) <= 1e-12);
    }
}

TEST_CASE("matrices A and B at d=2") {
    CHECK(matrix_residual(matrix_a(2), ComplexMatrix(2, {0, 1, -1, 0})) <= 1e-15);
    CHECK(matrix_residual(matrix_b(2), ComplexMatrix(2, {0, 1, 1, 0})) == 0.0);
}

TEST_CASE("A acts as a phased shift at d=3") {
    const ComplexMatrix a = matrix_a(3);
    // A|0> = w^{-1}|2> = w^2 |2>
    const std::vector<cd> out = a.apply({1, 0, 0});
    CHECK(std::abs(out[0]) <= 1e-15);
    CHECK(std::abs(out[1]) <= 1e-15);
    CHECK(std::abs(out[2] - kOmega3 * kOmega3) <= 1e-15);
    CHECK(matrix_residual(a.pow(3), ComplexMatrix::identity(3)) <= 1e-14);
}

TEST_CASE("A and B relations hold for all small d") {
    for (int d = 2; d <= 8; ++d) {
        const RootsOfUnity roots(d);
        const ComplexMatrix a = matrix_a(d);
        const ComplexMatrix b = matrix_b(d);
        const cd sign = (d % 2 == 0) ? cd{-1, 0} : cd{1, 0};
        CHECK(matrix_residual(a.pow(d), ComplexMatrix::identity(d).scaled(sign)) <= 1e-10);
        CHECK(matrix_residual(b.pow(d), ComplexMatrix::identity(d)) <= 1e-10);
        CHECK(matrix_residual(a * b, (b * a).scaled(roots.q_pow(-1))) <= 1e-10);
    }
}

TEST_CASE("verify_qpa reports pass for small d") {
    for (int d : {2, 3, 7}) {
        const VerificationReport report = verify_qpa(d, 1e-10);
        CHECK(report.pass());
        CHECK(report.checks.size() == 6);
        for (const auto& c : report.checks) CHECK(c.residual <= 1e-12);
    }
}

TEST_CASE("verify_qpa reports failure under an absurd tolerance") {
    CHECK_FALSE(verify_qpa(7, 1e-30).pass());
}

TEST_CASE("Weyl exchange relation X^m Z^n = q^{mn} Z^n X^m") {
    for (int d = 2; d <= 8; ++d) {
        const RootsOfUnity roots(d);
        const ComplexMatrix x = generator_x(d);
        const ComplexMatrix z = generator_z(d);
        for (int m = 0; m < d; ++m)
            for (int n = 0; n < d; ++n) {
                const ComplexMatrix lhs = x.pow(m) * z.pow(n);
                const ComplexMatrix rhs =
                    (z.pow(n) * x.pow(m)).scaled(roots.q_pow(static_cast<std::int64_t>(m) * n));
                CHECK(matrix_residual(lhs, rhs) <= 1e-10);
            }
    }
}

TEST_CASE("X and Z are unitary") {
    for (int d = 2; d <= 8; ++d) {
        CHECK(unitarity_residual(generator_x(d)) <= 1e-12);
        CHECK(unitarity_residual(generator_z(d)) <= 1e-12);
    }
}

TEST_CASE("cyclic action on basis states") {
    for (int d : {2, 3, 5}) {
        const RootsOfUnity roots(d);
        const ComplexMatrix x = generator_x(d);
        const ComplexMatrix z = generator_z(d);
        for (int k = 0; k < d; ++k) {
            std::vector<cd> ket(d, cd{0, 0});
            ket[k] = 1.0;
            for (int l = 0; l < 2 * d; ++l) {
                const std::vector<cd> xk = x.pow(l).apply(ket);
                const int shifted = ((k - l) % d + d) % d;
                for (int r = 0; r < d; ++r) {
                    CHECK(std::abs(xk[r] - (r == shifted ? cd{1, 0} : cd{0, 0})) <= 1e-12);
                }
                const std::vector<cd> zk = z.pow(l).apply(ket);
                CHECK(std::abs(zk[k] - roots.q_pow(static_cast<std::int64_t>(k) * l)) <= 1e-12);
            }
        }
    }
}
