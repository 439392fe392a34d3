#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "quditbraid/errors.hpp"

namespace quditbraid {

using cd = std::complex<double>;

inline constexpr std::int64_t kDefaultDenseBudget = 4096;
inline constexpr std::int64_t kMaxStateAmplitudes = 10'000'000;

/// Shape of an N-qudit system: d levels per site, N sites, and the maximum
/// total dimension allowed for dense-matrix work.
struct QuditShape {
    int d = 2;
    int sites = 1;
    std::int64_t budget = kDefaultDenseBudget;

    QuditShape() = default;
    QuditShape(int d_, int sites_, std::int64_t budget_ = kDefaultDenseBudget);

    /// d^sites. Throws BudgetError if it exceeds kMaxStateAmplitudes.
    std::int64_t dim() const;
    /// d^sites, additionally checked against the dense budget.
    std::int64_t dense_dim() const;
};

/// Dense square matrix of complex doubles, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::int64_t dim);  // zero-filled
    ComplexMatrix(std::int64_t dim, std::vector<cd> entries);

    static ComplexMatrix identity(std::int64_t dim);

    std::int64_t dim() const { return dim_; }
    cd& at(std::int64_t r, std::int64_t c) { return entries_[r * dim_ + c]; }
    const cd& at(std::int64_t r, std::int64_t c) const { return entries_[r * dim_ + c]; }
    const std::vector<cd>& entries() const { return entries_; }

    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix operator+(const ComplexMatrix& rhs) const;
    ComplexMatrix operator-(const ComplexMatrix& rhs) const;
    ComplexMatrix scaled(cd factor) const;
    ComplexMatrix adjoint() const;
    ComplexMatrix pow(int exponent) const;  // exponent >= 0

    std::vector<cd> apply(const std::vector<cd>& v) const;

    bool all_finite() const;

private:
    std::int64_t dim_ = 0;
    std::vector<cd> entries_;
};

/// Complex amplitude vector over an N-qudit Hilbert space of dimension d^sites.
struct StateVector {
    int d = 2;
    int sites = 1;
    std::vector<cd> amplitudes;

    StateVector() = default;
    StateVector(int d_, int sites_, std::vector<cd> amps);

    static StateVector basis_state(const QuditShape& shape, const std::vector<int>& digits);

    std::int64_t dim() const { return static_cast<std::int64_t>(amplitudes.size()); }
    double norm() const;
    bool is_normalized(double tol = 1e-10) const;
};

/// Eigenphases in (-pi, pi] and orthonormal eigenvectors (columns) of a
/// unitary matrix.
struct SpectralDecomposition {
    std::vector<double> phases;
    ComplexMatrix vectors;
};

/// Kronecker product; the left factor is index-most-significant.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   std::int64_t budget = kDefaultDenseBudget);

/// Big-endian digit packing: index = sum_j k_j * d^(N-j).
std::int64_t basis_index(const std::vector<int>& digits, const QuditShape& shape);
/// Inverse of basis_index.
std::vector<int> basis_digits(std::int64_t index, const QuditShape& shape);

/// Reduced density operator on the kept sites (1-based site labels).
ComplexMatrix partial_trace(const StateVector& psi, const std::vector<int>& keep);

/// Spectral decomposition of a unitary matrix; throws NotUnitaryError if the
/// unitarity residual of u exceeds tol.
SpectralDecomposition spectral_decompose_unitary(const ComplexMatrix& u, double tol = 1e-10);

/// Max-entry absolute difference.
double matrix_residual(const ComplexMatrix& a, const ComplexMatrix& b);
double vector_residual(const std::vector<cd>& a, const std::vector<cd>& b);

/// ||u^H u - I||_max.
double unitarity_residual(const ComplexMatrix& u);
/// ||a - a^H||_max.
double hermiticity_residual(const ComplexMatrix& a);

/// sum_k e^{i phases[k]} |u_k><u_k| rebuilt from a decomposition.
ComplexMatrix spectral_resynthesize(const SpectralDecomposition& sd);

/// e^{iH} for Hermitian H, via eigendecomposition.
ComplexMatrix exp_i_hermitian(const ComplexMatrix& h);

}  // namespace quditbraid
