#include "quditbraid/entangle.hpp"

#include <cmath>

#include "quditbraid/braid.hpp"
#include "quditbraid/qpa.hpp"

namespace quditbraid {

GhzLabel::GhzLabel(QuditShape shape_, std::vector<int> k_)
    : shape(std::move(shape_)), k(std::move(k_)) {
    if (static_cast<int>(k.size()) != shape.sites) {
        throw std::invalid_argument("GhzLabel: digit count must equal sites");
    }
    for (int digit : k) {
        if (digit < 0 || digit >= shape.d) {
            throw std::invalid_argument("GhzLabel: digit " + std::to_string(digit) +
                                        " out of range for d=" + std::to_string(shape.d));
        }
    }
}

StateVector ghz_closed_form(const GhzLabel& label) {
    const int d = label.shape.d;
    const int n = label.shape.sites;
    const std::int64_t dim = label.shape.dim();
    const RootsOfUnity roots(d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    const std::int64_t k1 = label.k.front();

    std::vector<cd> amps(dim, cd{0.0, 0.0});
    std::vector<int> shifted(n);
    for (std::int64_t i = 0; i < d; ++i) {
        for (int j = 0; j < n; ++j) shifted[j] = static_cast<int>((label.k[j] - i % d + d) % d);
        // exponent kept in exact integers: i(2k1+i+1)/2 = i*k1 + i(i+1)/2
        const std::int64_t exponent =
            (d % 2 == 1) ? i * k1 + i * (i + 1) / 2 : 2 * k1 * i;
        amps[basis_index(shifted, label.shape)] = scale * roots.omega_pow(exponent);
    }
    return StateVector(d, n, std::move(amps));
}

StateVector ghz_by_braid(const GhzLabel& label) {
    const ComplexMatrix s = braid_matrix(label.shape);
    const StateVector basis = StateVector::basis_state(label.shape, label.k);
    return StateVector(label.shape.d, label.shape.sites, s.apply(basis.amplitudes));
}

ComplexMatrix phase_removal_unitary(const QuditShape& shape) {
    if (shape.d != 3) {
        throw std::invalid_argument("phase_removal_unitary: supported only for d=3");
    }
    const RootsOfUnity roots(3);
    const cd corr = std::polar(1.0, -roots.omega_arg / shape.sites);  // omega^{-1/N}
    ComplexMatrix u(3);
    u.at(0, 0) = 1.0;
    u.at(1, 1) = 1.0;
    u.at(2, 2) = corr;
    ComplexMatrix full = u;
    for (int s = 1; s < shape.sites; ++s) full = kron(full, u, kMaxStateAmplitudes);
    return full;
}

namespace {

double subset_purity(const StateVector& psi, const std::vector<int>& keep) {
    const ComplexMatrix rho = partial_trace(psi, keep);
    double purity = 0.0;
    for (const cd& e : rho.entries()) purity += std::norm(e);
    return purity;
}

}  // namespace

double q_measure(const StateVector& psi, int m) {
    const int n = psi.sites;
    if (m < 1 || m > n / 2) {
        throw std::invalid_argument("q_measure: m must satisfy 1 <= m <= floor(N/2)");
    }
    if (!psi.is_normalized(1e-8)) {
        throw DataError("q_measure: state is not normalized");
    }

    // enumerate all C(N, m) subsets of {1..N}
    double purity_sum = 0.0;
    std::int64_t subsets = 0;
    std::vector<int> keep(m);
    for (int j = 0; j < m; ++j) keep[j] = j + 1;
    while (true) {
        purity_sum += subset_purity(psi, keep);
        ++subsets;
        int j = m - 1;
        while (j >= 0 && keep[j] == n - m + j + 1) --j;
        if (j < 0) break;
        ++keep[j];
        for (int l = j + 1; l < m; ++l) keep[l] = keep[l - 1] + 1;
    }

    const double dm = std::pow(static_cast<double>(psi.d), m);
    return dm / (dm - 1.0) * (1.0 - purity_sum / static_cast<double>(subsets));
}

double q_measure_ghz_closed_form(int d, int m) {
    if (d < 2) throw std::invalid_argument("q_measure_ghz_closed_form: d must be >= 2");
    if (m < 1) throw std::invalid_argument("q_measure_ghz_closed_form: m must be >= 1");
    if (m == 1) return 1.0;
    const double dm = std::pow(static_cast<double>(d), m);
    const double dm1 = std::pow(static_cast<double>(d), m - 1);
    return 1.0 - (dm1 - 1.0) / (dm - 1.0);
}

}  // namespace quditbraid
