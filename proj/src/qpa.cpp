#include "quditbraid/qpa.hpp"

#include <cmath>
#include <numbers>

namespace quditbraid {

namespace {

void require_level(int d) {
    if (d < 2) throw std::invalid_argument("level count d must be >= 2");
}

// e^{i * e * (2pi/period)} with the exponent reduced first, so large powers
// do not accumulate angle error.
cd root_power(std::int64_t e, int period) {
    std::int64_t r = e % period;
    if (r < 0) r += period;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / period;
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace

RootsOfUnity::RootsOfUnity(int d_) : d(d_) {
    require_level(d);
    q = root_power(1, d);
    omega_period = (d % 2 == 0) ? 2 * d : d;
    omega = root_power(1, omega_period);
    omega_arg = 2.0 * std::numbers::pi / omega_period;
}

cd RootsOfUnity::q_pow(std::int64_t e) const { return root_power(e, d); }

cd RootsOfUnity::omega_pow(std::int64_t e) const { return root_power(e, omega_period); }

ComplexMatrix generator_x(int d) {
    require_level(d);
    ComplexMatrix x(d);
    for (int k = 0; k < d; ++k) x.at((k - 1 + d) % d, k) = 1.0;
    return x;
}

ComplexMatrix generator_z(int d) {
    require_level(d);
    const RootsOfUnity roots(d);
    ComplexMatrix z(d);
    for (int k = 0; k < d; ++k) z.at(k, k) = roots.q_pow(k);
    return z;
}

ComplexMatrix fourier(int d) {
    require_level(d);
    const RootsOfUnity roots(d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    ComplexMatrix f(d);
    for (int k = 0; k < d; ++k)
        for (int kp = 0; kp < d; ++kp)
            f.at(k, kp) = scale * roots.q_pow(-static_cast<std::int64_t>(k) * kp);
    return f;
}

ComplexMatrix matrix_a(int d) { return generator_z(d) * generator_x(d); }

ComplexMatrix matrix_b(int d) { return generator_x(d); }

VerificationReport verify_qpa(int d, double tol) {
    require_level(d);
    const RootsOfUnity roots(d);
    const ComplexMatrix x = generator_x(d);
    const ComplexMatrix z = generator_z(d);
    const ComplexMatrix f = fourier(d);
    const ComplexMatrix a = matrix_a(d);
    const ComplexMatrix b = matrix_b(d);
    const ComplexMatrix id = ComplexMatrix::identity(d);

    VerificationReport report;
    report.add("XZ - qZX", matrix_residual(x * z, (z * x).scaled(roots.q)), tol);
    report.add("X^d - I", matrix_residual(x.pow(d), id), tol);
    report.add("Z^d - I", matrix_residual(z.pow(d), id), tol);
    report.add("X - F^H Z F", matrix_residual(x, f.adjoint() * z * f), tol);
    const cd a_sign = (d % 2 == 0) ? cd{-1.0, 0.0} : cd{1.0, 0.0};
    report.add("A^d - (-1)^(d-1) I", matrix_residual(a.pow(d), id.scaled(a_sign)), tol);
    report.add("AB - q^{-1} BA", matrix_residual(a * b, (b * a).scaled(roots.q_pow(-1))), tol);
    return report;
}

}  // namespace quditbraid
