/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "bosonspec/forms.hpp"
#include "bosonspec/normal_modes.hpp"
#include "bosonspec/types.hpp"

namespace bosonspec {

/// H in the truncated number basis {|0>, ..., |cutoff>}:
///   <n|H|n> = A(n + 1/2),
///   <n+2|H|n> = (B+/2) sqrt((n+1)(n+2)),
///   <n|H|n+2> = (B-/2) sqrt((n+1)(n+2)).
Eigen::MatrixXcd fock_matrix(const OneModeForm& form, int cutoff);

/// Two-mode version on the product basis |n1 n2>, n_i <= cutoff per mode.
Eigen::MatrixXcd fock_matrix_two_mode(const MultiModeForm& form, int cutoff);

/// All eigenvalues of the dense non-symmetric matrix, sorted by real part
/// then imaginary part (LAPACK zgeev).
std::vector<cplx> dense_eigenvalues(const Eigen::MatrixXcd& m);

std::vector<cplx> fock_eigenvalues(const OneModeForm& form, int cutoff);

enum class VacuumKind { B, Bbar, BbarDagger };

/// Expansion of the vacuum over |2n_a>: c_n = (z/2)^n sqrt((2n)!)/n! with
/// z = -v/u, -v̄/ū or -ū*/v̄* for the b, b̄ and b̄† vacua respectively.
struct VacuumSeriesReport {
    std::vector<cplx> coefficients;
    double ratio_trend = 0.0;  // limit of |c_{n+1}/c_n| -> |z|
    bool convergent = false;   // |z| < 1
    bool conditional = false;  // |z| = 1 within tol but z != 1
};

VacuumSeriesReport vacuum_series(VacuumKind which, const BogoliubovCoeffs& coeffs,
                                 int n_max = 50, double tol = 1e-9);

struct SpectrumComparison {
    std::vector<cplx> analytic;  // lambda(n + 1/2), n = 0..k-1
    std::vector<cplx> matched;   // nearest truncated eigenvalues
    double max_abs_diff = 0.0;
    double doubling_shift = 0.0;  // movement of the matches at 2x cutoff
    bool stable = false;
};

/// Matches the analytic ladder against the truncated spectrum, nearest
/// neighbor in the complex plane, and reports cutoff-doubling stability.
/// The instability flag (stable = false) is the expected diagnostic in
/// regions II/III where the true spectrum is not discrete.
SpectrumComparison compare_spectrum(const OneModeForm& form, int cutoff, int k,
                                    double stability_tol = 1e-8);

} // namespace bosonspec
