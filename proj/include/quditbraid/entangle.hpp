#pragma once

#include "quditbraid/tensor.hpp"

namespace quditbraid {

/// Label (k_1, ..., k_N) of a generalized GHZ basis state.
struct GhzLabel {
    QuditShape shape;
    std::vector<int> k;

    GhzLabel(QuditShape shape_, std::vector<int> k_);
};

/// GHZ state by closed form: d nonzero amplitudes of modulus d^{-1/2} at
/// |k_1-i, ..., k_N-i> with coefficient alpha_i (odd d) or beta_i (even d).
StateVector ghz_closed_form(const GhzLabel& label);

/// GHZ state as the dense product S |k_1, ..., k_N>.
StateVector ghz_by_braid(const GhzLabel& label);

/// Local unitary u (x) ... (x) u with u = diag(1, 1, omega^{-1/N}) that
/// strips the residual phase from the d=3 GHZ-like state. d=3 only.
ComplexMatrix phase_removal_unitary(const QuditShape& shape);

/// Scott Q-measure: Q_m = d^m/(d^m-1) (1 - m!(N-m)!/N! sum_{|s|=m} Tr rho_s^2).
double q_measure(const StateVector& psi, int m);

/// Closed form for GHZ states: Q_m = 1 - (d^{m-1}-1)/(d^m-1).
double q_measure_ghz_closed_form(int d, int m);

}  // namespace quditbraid
