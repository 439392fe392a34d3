#include "quditbraid/tensor.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace quditbraid {

namespace {

using EigenMat = Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MapMat = Eigen::Map<const EigenMat>;

std::int64_t checked_pow(int d, int sites, std::int64_t cap, const char* what) {
    std::int64_t result = 1;
    for (int i = 0; i < sites; ++i) {
        if (result > cap / d) {
            throw BudgetError(std::string(what) + ": d^sites exceeds " + std::to_string(cap));
        }
        result *= d;
    }
    return result;
}

}  // namespace

QuditShape::QuditShape(int d_, int sites_, std::int64_t budget_)
    : d(d_), sites(sites_), budget(budget_) {
    if (d < 2) throw std::invalid_argument("QuditShape: d must be >= 2");
    if (sites < 1) throw std::invalid_argument("QuditShape: sites must be >= 1");
    if (budget < 1) throw std::invalid_argument("QuditShape: budget must be >= 1");
}

std::int64_t QuditShape::dim() const {
    return checked_pow(d, sites, kMaxStateAmplitudes, "state dimension");
}

std::int64_t QuditShape::dense_dim() const {
    return checked_pow(d, sites, budget, "dense dimension");
}

ComplexMatrix::ComplexMatrix(std::int64_t dim) : dim_(dim), entries_(dim * dim, cd{0.0, 0.0}) {
    if (dim < 1) throw std::invalid_argument("ComplexMatrix: dim must be positive");
}

ComplexMatrix::ComplexMatrix(std::int64_t dim, std::vector<cd> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim < 1) throw std::invalid_argument("ComplexMatrix: dim must be positive");
    if (static_cast<std::int64_t>(entries_.size()) != dim * dim) {
        throw std::invalid_argument("ComplexMatrix: entries length must equal dim^2");
    }
}

ComplexMatrix ComplexMatrix::identity(std::int64_t dim) {
    ComplexMatrix m(dim);
    for (std::int64_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (dim_ != rhs.dim_) throw std::invalid_argument("matrix multiply: dimension mismatch");
    ComplexMatrix out(dim_);
    MapMat a(entries_.data(), dim_, dim_);
    MapMat b(rhs.entries_.data(), dim_, dim_);
    Eigen::Map<EigenMat>(out.entries_.data(), dim_, dim_) = a * b;
    return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
    if (dim_ != rhs.dim_) throw std::invalid_argument("matrix add: dimension mismatch");
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + rhs.entries_[i];
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
    if (dim_ != rhs.dim_) throw std::invalid_argument("matrix subtract: dimension mismatch");
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - rhs.entries_[i];
    return out;
}

ComplexMatrix ComplexMatrix::scaled(cd factor) const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = factor * entries_[i];
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::int64_t r = 0; r < dim_; ++r)
        for (std::int64_t c = 0; c < dim_; ++c) out.at(c, r) = std::conj(at(r, c));
    return out;
}

ComplexMatrix ComplexMatrix::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("matrix pow: exponent must be >= 0");
    ComplexMatrix acc = identity(dim_);
    for (int i = 0; i < exponent; ++i) acc = acc * *this;
    return acc;
}

std::vector<cd> ComplexMatrix::apply(const std::vector<cd>& v) const {
    if (static_cast<std::int64_t>(v.size()) != dim_) {
        throw std::invalid_argument("matrix apply: vector length mismatch");
    }
    std::vector<cd> out(dim_, cd{0.0, 0.0});
    for (std::int64_t r = 0; r < dim_; ++r) {
        cd acc{0.0, 0.0};
        for (std::int64_t c = 0; c < dim_; ++c) acc += at(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const cd& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

StateVector::StateVector(int d_, int sites_, std::vector<cd> amps)
    : d(d_), sites(sites_), amplitudes(std::move(amps)) {
    if (d < 2) throw std::invalid_argument("StateVector: d must be >= 2");
    if (sites < 1) throw std::invalid_argument("StateVector: sites must be >= 1");
    const std::int64_t expect = checked_pow(d, sites, kMaxStateAmplitudes, "state dimension");
    if (static_cast<std::int64_t>(amplitudes.size()) != expect) {
        throw std::invalid_argument("StateVector: amplitude count must equal d^sites");
    }
}

StateVector StateVector::basis_state(const QuditShape& shape, const std::vector<int>& digits) {
    std::vector<cd> amps(shape.dim(), cd{0.0, 0.0});
    amps[basis_index(digits, shape)] = 1.0;
    return StateVector(shape.d, shape.sites, std::move(amps));
}

double StateVector::norm() const {
    double s = 0.0;
    for (const cd& a : amplitudes) s += std::norm(a);
    return std::sqrt(s);
}

bool StateVector::is_normalized(double tol) const {
    return std::abs(norm() - 1.0) <= tol;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, std::int64_t budget) {
    const std::int64_t da = a.dim(), db = b.dim();
    if (da > budget / db) {
        throw BudgetError("kron: product dimension " + std::to_string(da) + "*" +
                          std::to_string(db) + " exceeds budget " + std::to_string(budget));
    }
    ComplexMatrix out(da * db);
    for (std::int64_t ra = 0; ra < da; ++ra)
        for (std::int64_t ca = 0; ca < da; ++ca) {
            const cd f = a.at(ra, ca);
            if (f == cd{0.0, 0.0}) continue;
            for (std::int64_t rb = 0; rb < db; ++rb)
                for (std::int64_t cb = 0; cb < db; ++cb)
                    out.at(ra * db + rb, ca * db + cb) = f * b.at(rb, cb);
        }
    return out;
}

std::int64_t basis_index(const std::vector<int>& digits, const QuditShape& shape) {
    if (static_cast<int>(digits.size()) != shape.sites) {
        throw std::invalid_argument("basis_index: digit count must equal sites");
    }
    std::int64_t index = 0;
    for (int k : digits) {
        if (k < 0 || k >= shape.d) {
            throw std::invalid_argument("basis_index: digit " + std::to_string(k) +
                                        " out of range for d=" + std::to_string(shape.d));
        }
        index = index * shape.d + k;
    }
    return index;
}

std::vector<int> basis_digits(std::int64_t index, const QuditShape& shape) {
    if (index < 0 || index >= shape.dim()) {
        throw std::invalid_argument("basis_digits: index out of range");
    }
    std::vector<int> digits(shape.sites);
    for (int j = shape.sites - 1; j >= 0; --j) {
        digits[j] = static_cast<int>(index % shape.d);
        index /= shape.d;
    }
    return digits;
}

ComplexMatrix partial_trace(const StateVector& psi, const std::vector<int>& keep) {
    const int n = psi.sites;
    if (keep.empty()) throw std::invalid_argument("partial_trace: keep must be nonempty");
    std::vector<bool> kept(n, false);
    for (int s : keep) {
        if (s < 1 || s > n) throw std::invalid_argument("partial_trace: site label out of range");
        if (kept[s - 1]) throw std::invalid_argument("partial_trace: duplicate site label");
        kept[s - 1] = true;
    }
    const int m = static_cast<int>(keep.size());
    if (m == n) throw std::invalid_argument("partial_trace: keep must be a proper subset");

    std::vector<int> keep_sites, env_sites;
    for (int s = 0; s < n; ++s) (kept[s] ? keep_sites : env_sites).push_back(s);

    // Strides of each site in the big-endian global index.
    std::vector<std::int64_t> stride(n, 1);
    for (int s = n - 2; s >= 0; --s) stride[s] = stride[s + 1] * psi.d;

    const QuditShape kshape(psi.d, m, kMaxStateAmplitudes);
    const QuditShape eshape(psi.d, n - m, kMaxStateAmplitudes);
    const std::int64_t kdim = kshape.dim();
    const std::int64_t edim = eshape.dim();

    auto offset = [&](const std::vector<int>& sites, std::int64_t packed, int count) {
        std::int64_t off = 0;
        for (int j = count - 1; j >= 0; --j) {
            off += (packed % psi.d) * stride[sites[j]];
            packed /= psi.d;
        }
        return off;
    };

    std::vector<std::int64_t> keep_off(kdim), env_off(edim);
    for (std::int64_t i = 0; i < kdim; ++i) keep_off[i] = offset(keep_sites, i, m);
    for (std::int64_t e = 0; e < edim; ++e) env_off[e] = offset(env_sites, e, n - m);

    ComplexMatrix rho(kdim);
    for (std::int64_t i = 0; i < kdim; ++i)
        for (std::int64_t j = 0; j < kdim; ++j) {
            cd acc{0.0, 0.0};
            for (std::int64_t e = 0; e < edim; ++e) {
                acc += psi.amplitudes[keep_off[i] + env_off[e]] *
                       std::conj(psi.amplitudes[keep_off[j] + env_off[e]]);
            }
            rho.at(i, j) = acc;
        }
    return rho;
}

double unitarity_residual(const ComplexMatrix& u) {
    return matrix_residual(u.adjoint() * u, ComplexMatrix::identity(u.dim()));
}

double hermiticity_residual(const ComplexMatrix& a) {
    return matrix_residual(a, a.adjoint());
}

SpectralDecomposition spectral_decompose_unitary(const ComplexMatrix& u, double tol) {
    const double ures = unitarity_residual(u);
    if (ures > tol) {
        throw NotUnitaryError("spectral_decompose_unitary: input not unitary, residual " +
                              std::to_string(ures),
                              ures);
    }
    const std::int64_t n = u.dim();
    MapMat um(u.entries().data(), n, n);
    // A unitary matrix is normal, so its Schur form is diagonal and the Schur
    // basis is an orthonormal eigenbasis.
    Eigen::ComplexSchur<EigenMat> schur(um, true);
    if (schur.info() != Eigen::Success) {
        throw std::runtime_error("spectral_decompose_unitary: Schur decomposition failed");
    }

    SpectralDecomposition sd;
    sd.phases.resize(n);
    sd.vectors = ComplexMatrix(n);
    for (std::int64_t k = 0; k < n; ++k) {
        double phi = std::arg(schur.matrixT()(k, k));
        if (phi <= -std::numbers::pi) phi = std::numbers::pi;  // -1 maps to +pi
        sd.phases[k] = phi;
        for (std::int64_t r = 0; r < n; ++r) sd.vectors.at(r, k) = schur.matrixU()(r, k);
    }
    return sd;
}

ComplexMatrix spectral_resynthesize(const SpectralDecomposition& sd) {
    const std::int64_t n = sd.vectors.dim();
    ComplexMatrix out(n);
    for (std::int64_t k = 0; k < n; ++k) {
        const cd phase = std::polar(1.0, sd.phases[k]);
        for (std::int64_t r = 0; r < n; ++r)
            for (std::int64_t c = 0; c < n; ++c)
                out.at(r, c) += phase * sd.vectors.at(r, k) * std::conj(sd.vectors.at(c, k));
    }
    return out;
}

ComplexMatrix exp_i_hermitian(const ComplexMatrix& h) {
    const std::int64_t n = h.dim();
    MapMat hm(h.entries().data(), n, n);
    Eigen::SelfAdjointEigenSolver<EigenMat> es(hm);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("exp_i_hermitian: eigendecomposition failed");
    }
    Eigen::VectorXcd phases(n);
    for (std::int64_t k = 0; k < n; ++k) phases(k) = std::polar(1.0, es.eigenvalues()(k));
    const EigenMat result = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    ComplexMatrix out(n);
    for (std::int64_t r = 0; r < n; ++r)
        for (std::int64_t c = 0; c < n; ++c) out.at(r, c) = result(r, c);
    return out;
}

double matrix_residual(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix_residual: dimension mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

double vector_residual(const std::vector<cd>& a, const std::vector<cd>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector_residual: length mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace quditbraid
