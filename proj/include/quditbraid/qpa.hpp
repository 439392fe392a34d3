#pragma once

#include "quditbraid/report.hpp"
#include "quditbraid/tensor.hpp"

namespace quditbraid {

/// Primitive roots attached to a level count d: q = e^{i 2pi/d} always, and
/// omega = e^{i pi/d} for even d, omega = q for odd d.
struct RootsOfUnity {
    int d;
    cd q;
    cd omega;
    double omega_arg;  // exact angle of omega
    int omega_period;  // smallest p > 0 with omega^p = 1 (2d even, d odd)

    explicit RootsOfUnity(int d_);

    cd q_pow(std::int64_t e) const;
    cd omega_pow(std::int64_t e) const;
};

/// Cyclic shift X|k> = |k-1 mod d>, entries in {0,1}.
ComplexMatrix generator_x(int d);

/// Clock matrix diag(1, q, ..., q^{d-1}).
ComplexMatrix generator_z(int d);

/// Fourier operator F = d^{-1/2} sum q^{-kk'} |k><k'|; satisfies X = F^H Z F.
ComplexMatrix fourier(int d);

/// A = Z X, so A|k> = q^{k-1}|k-1 mod d>.
ComplexMatrix matrix_a(int d);

/// B = X.
ComplexMatrix matrix_b(int d);

/// Residuals of the defining relations: XZ = qZX, X^d = Z^d = I, X = F^H Z F,
/// A^d = (-1)^{d-1} I, AB = q^{-1} BA.
VerificationReport verify_qpa(int d, double tol);

}  // namespace quditbraid
