#include <doctest.h>

#include <cmath>
#include <numbers>

#include "quditbraid/braid.hpp"
#include "quditbraid/qpa.hpp"

using namespace quditbraid;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kInvSqrt3 = 1.0 / std::sqrt(3.0);
const cd kOmega3 = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);

ComplexMatrix eight_vertex() {
    ComplexMatrix s(4, {1, 0, 0, -1,  //
                        0, 1, -1, 0,  //
                        0, 1, 1, 0,   //
                        1, 0, 0, 1});
    return s.scaled(kInvSqrt2);
}
}  // namespace

TEST_CASE("M matrix at d=2, N=2") {
    const ComplexMatrix expected(4, {0, 0, 0, 1,   //
                                     0, 0, 1, 0,   //
                                     0, -1, 0, 0,  //
                                     -1, 0, 0, 0});
    CHECK(matrix_residual(m_matrix(QuditShape(2, 2)), expected) <= 1e-15);
}

TEST_CASE("M maps |000> to w^2 |222> at d=3, N=3") {
    const ComplexMatrix m = m_matrix(QuditShape(3, 3));
    std::vector<cd> ket(27, cd{0, 0});
    ket[0] = 1.0;
    const std::vector<cd> out = m.apply(ket);
    for (int i = 0; i < 27; ++i) {
        if (i == 26) {
            CHECK(std::abs(out[i] - kOmega3 * kOmega3) <= 1e-14);
        } else {
            CHECK(std::abs(out[i]) <= 1e-14);
        }
    }
}

TEST_CASE("M squared is -I at d=2, N=3") {
    const ComplexMatrix m = m_matrix(QuditShape(2, 3));
    CHECK(matrix_residual(m * m, ComplexMatrix::identity(8).scaled(cd{-1, 0})) <= 1e-14);
}

TEST_CASE("M algebra verification") {
    CHECK(verify_m_algebra(QuditShape(2, 2), 1e-10).pass());
    CHECK(verify_m_algebra(QuditShape(3, 2), 1e-10).pass());
    CHECK(verify_m_algebra(QuditShape(3, 3), 1e-10).pass());

    const VerificationReport d4 = verify_m_algebra(QuditShape(4, 2), 1e-10);
    CHECK(d4.checks.size() == 2);
    for (const auto& c : d4.checks) CHECK(std::isfinite(c.residual));
}

TEST_CASE("eight-vertex braid matrix") {
    CHECK(matrix_residual(braid_matrix(QuditShape(2, 2)), eight_vertex()) <= 1e-12);
}

TEST_CASE("d=2 closed form S = (I - M)/sqrt(2)") {
    for (int n : {2, 3}) {
        const QuditShape shape(2, n);
        const ComplexMatrix m = m_matrix(shape);
        const ComplexMatrix closed =
            (ComplexMatrix::identity(m.dim()) - m).scaled(cd{kInvSqrt2, 0});
        CHECK(matrix_residual(braid_matrix(shape), closed) <= 1e-12);
    }
}

TEST_CASE("d=3 closed form S = (I + w^2 M + M^2)/sqrt(3)") {
    for (int n : {2, 3}) {
        const QuditShape shape(3, n);
        const ComplexMatrix m = m_matrix(shape);
        const ComplexMatrix closed =
            (ComplexMatrix::identity(m.dim()) + m.scaled(kOmega3 * kOmega3) + m * m)
                .scaled(cd{kInvSqrt3, 0});
        CHECK(matrix_residual(braid_matrix(shape), closed) <= 1e-12);
    }
}

TEST_CASE("embeddings") {
    CHECK(matrix_residual(embed_left(ComplexMatrix::identity(4), 2),
                          ComplexMatrix::identity(8)) == 0.0);

    // I (x) S applied to |000> gives |0> (x) S|00>
    const ComplexMatrix s = braid_matrix(QuditShape(2, 2));
    std::vector<cd> ket(8, cd{0, 0});
    ket[0] = 1.0;
    const std::vector<cd> out = embed_right(s, 2).apply(ket);
    CHECK(std::abs(out[0] - cd{kInvSqrt2, 0}) <= 1e-14);
    CHECK(std::abs(out[3] - cd{kInvSqrt2, 0}) <= 1e-14);
    for (int i : {1, 2, 4, 5, 6, 7}) CHECK(std::abs(out[i]) <= 1e-14);

    const ComplexMatrix x = generator_x(2);
    CHECK(matrix_residual(embed_left(x, 2) * embed_right(x, 2), kron(x, x)) <= 1e-15);
}

TEST_CASE("braid relation holds for d in {2,3}") {
    CHECK(verify_braid_relation(QuditShape(2, 2), 1e-10).pass());
    CHECK(verify_braid_relation(QuditShape(2, 3), 1e-10).pass());
    CHECK(verify_braid_relation(QuditShape(3, 2), 1e-10).pass());
    CHECK(verify_braid_relation(QuditShape(3, 3), 1e-10).pass());
}

TEST_CASE("braid relation report is produced for d=5") {
    const VerificationReport report = verify_braid_relation(QuditShape(5, 2), 1e-10);
    CHECK(report.checks.size() == 2);
    for (const auto& c : report.checks) CHECK(std::isfinite(c.residual));
}

TEST_CASE("braid matrix is unitary across the desk-scale grid") {
    for (int d = 2; d <= 5; ++d)
        for (int n = 2; n <= 3; ++n) {
            const QuditShape shape(d, n);
            if (shape.dim() > shape.budget) continue;
            CHECK(unitarity_residual(braid_matrix(shape)) <= 1e-10);
        }
}

TEST_CASE("hamiltonian of the identity is zero") {
    const ComplexMatrix h = hamiltonian_from_braid(ComplexMatrix::identity(3));
    CHECK(matrix_residual(h, ComplexMatrix(3)) <= 1e-12);
}

TEST_CASE("hamiltonian branch convention") {
    ComplexMatrix u(2);
    u.at(0, 0) = 1;
    u.at(1, 1) = -1;
    const ComplexMatrix h = hamiltonian_from_braid(u);
    CHECK(std::abs(h.at(0, 0)) <= 1e-14);
    CHECK(std::abs(h.at(1, 1) - cd{std::numbers::pi, 0}) <= 1e-14);
}

TEST_CASE("hamiltonian round-trips the eight-vertex matrix") {
    const ComplexMatrix s = braid_matrix(QuditShape(2, 2));
    const ComplexMatrix h = hamiltonian_from_braid(s);
    CHECK(hermiticity_residual(h) <= 1e-12);
    CHECK(matrix_residual(exp_i_hermitian(h), s) <= 1e-8);
}

TEST_CASE("hamiltonian rejects non-unitary input") {
    ComplexMatrix m(2);
    m.at(0, 0) = 3.0;
    CHECK_THROWS_AS(hamiltonian_from_braid(m), NotUnitaryError);
}

TEST_CASE("budget violations surface as BudgetError") {
    CHECK_THROWS_AS(m_matrix(QuditShape(9, 9)), BudgetError);
    CHECK_THROWS_AS(verify_braid_relation(QuditShape(2, 12), 1e-10), BudgetError);
}

TEST_CASE("S maps a product state onto a maximally entangling image") {
    // column 0 of S has exactly d entries of modulus d^{-1/2}
    for (int d : {2, 3, 4}) {
        const ComplexMatrix s = braid_matrix(QuditShape(d, 2));
        int nonzero = 0;
        for (std::int64_t r = 0; r < s.dim(); ++r) {
            const double mag = std::abs(s.at(r, 0));
            if (mag > 1e-12) {
                ++nonzero;
                CHECK(mag == doctest::Approx(1.0 / std::sqrt(d)).epsilon(1e-10));
            }
        }
        CHECK(nonzero == d);
    }
}
