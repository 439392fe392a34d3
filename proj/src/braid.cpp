#include "quditbraid/braid.hpp"

#include <cmath>

#include "quditbraid/qpa.hpp"

namespace quditbraid {

ComplexMatrix m_matrix(const QuditShape& shape) {
    shape.dense_dim();
    ComplexMatrix m = matrix_a(shape.d);
    const ComplexMatrix b = matrix_b(shape.d);
    for (int s = 1; s < shape.sites; ++s) m = kron(m, b, shape.budget);
    return m;
}

ComplexMatrix braid_matrix(const QuditShape& shape) {
    const RootsOfUnity roots(shape.d);
    const ComplexMatrix m = m_matrix(shape);
    const std::int64_t dim = m.dim();
    const double scale = 1.0 / std::sqrt(static_cast<double>(shape.d));

    ComplexMatrix sum(dim);
    ComplexMatrix mk = ComplexMatrix::identity(dim);
    for (int k = 0; k < shape.d; ++k) {
        if (k > 0) mk = mk * m;
        sum = sum + mk.scaled(roots.omega_pow(static_cast<std::int64_t>(k) * (k + 1)));
    }
    return sum.scaled(scale);
}

ComplexMatrix embed_left(const ComplexMatrix& s, int d, std::int64_t budget) {
    return kron(s, ComplexMatrix::identity(d), budget);
}

ComplexMatrix embed_right(const ComplexMatrix& s, int d, std::int64_t budget) {
    return kron(ComplexMatrix::identity(d), s, budget);
}

VerificationReport verify_m_algebra(const QuditShape& shape, double tol) {
    const QuditShape extended(shape.d, shape.sites + 1, shape.budget);
    extended.dense_dim();

    const RootsOfUnity roots(shape.d);
    const ComplexMatrix m = m_matrix(shape);
    const cd sign = (shape.d % 2 == 0) ? cd{-1.0, 0.0} : cd{1.0, 0.0};

    VerificationReport report;
    report.add("M^d - (-1)^(d-1) I",
               matrix_residual(m.pow(shape.d), ComplexMatrix::identity(m.dim()).scaled(sign)),
               tol);

    const ComplexMatrix left = embed_left(m, shape.d, shape.budget);
    const ComplexMatrix right = embed_right(m, shape.d, shape.budget);
    report.add("M_1N M_2N+1 - q M_2N+1 M_1N",
               matrix_residual(left * right, (right * left).scaled(roots.q)), tol);
    return report;
}

VerificationReport verify_braid_relation(const QuditShape& shape, double tol) {
    const QuditShape extended(shape.d, shape.sites + 1, shape.budget);
    extended.dense_dim();

    const ComplexMatrix s = braid_matrix(shape);
    const ComplexMatrix left = embed_left(s, shape.d, shape.budget);
    const ComplexMatrix right = embed_right(s, shape.d, shape.budget);

    VerificationReport report;
    report.add("S unitarity", unitarity_residual(s), tol);
    report.add("S_1N S_2N+1 S_1N - S_2N+1 S_1N S_2N+1",
               matrix_residual(left * right * left, right * left * right), tol);
    return report;
}

ComplexMatrix hamiltonian_from_braid(const ComplexMatrix& s, double tol) {
    const SpectralDecomposition sd = spectral_decompose_unitary(s, tol);
    const std::int64_t n = s.dim();
    ComplexMatrix h(n);
    for (std::int64_t k = 0; k < n; ++k) {
        for (std::int64_t r = 0; r < n; ++r)
            for (std::int64_t c = 0; c < n; ++c)
                h.at(r, c) += sd.phases[k] * sd.vectors.at(r, k) * std::conj(sd.vectors.at(c, k));
    }
    // symmetrize away rounding in the projector sum
    ComplexMatrix herm(n);
    for (std::int64_t r = 0; r < n; ++r)
        for (std::int64_t c = 0; c < n; ++c)
            herm.at(r, c) = 0.5 * (h.at(r, c) + std::conj(h.at(c, r)));
    return herm;
}

}  // namespace quditbraid
