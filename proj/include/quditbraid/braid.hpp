#pragma once

#include "quditbraid/report.hpp"
#include "quditbraid/tensor.hpp"

namespace quditbraid {

/// M = A (x) B (x) ... (x) B on shape.sites factors.
ComplexMatrix m_matrix(const QuditShape& shape);

/// S = d^{-1/2} sum_{k=0}^{d-1} omega^{k(k+1)} M^k; unitary.
ComplexMatrix braid_matrix(const QuditShape& shape);

/// s (x) I_d, placing s on sites 1..N of an (N+1)-site system.
ComplexMatrix embed_left(const ComplexMatrix& s, int d,
                         std::int64_t budget = kDefaultDenseBudget);
/// I_d (x) s, placing s on sites 2..N+1.
ComplexMatrix embed_right(const ComplexMatrix& s, int d,
                          std::int64_t budget = kDefaultDenseBudget);

/// Residuals of M^d = (-1)^{d-1} I and the exchange relation
/// M_{1..N} M_{2..N+1} = q M_{2..N+1} M_{1..N} on N+1 sites.
VerificationReport verify_m_algebra(const QuditShape& shape, double tol);

/// Residuals of S_{1..N} S_{2..N+1} S_{1..N} = S_{2..N+1} S_{1..N} S_{2..N+1}
/// on N+1 sites, plus the unitarity residual of S.
VerificationReport verify_braid_relation(const QuditShape& shape, double tol);

/// H = -i log s via the spectral decomposition, principal branch (-pi, pi].
/// Hermitian; e^{iH} reconstructs s.
ComplexMatrix hamiltonian_from_braid(const ComplexMatrix& s, double tol = 1e-10);

}  // namespace quditbraid
