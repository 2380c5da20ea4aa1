/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <Eigen/Dense>

#include "bosonspec/types.hpp"

namespace bosonspec {

/// Coefficient triple of H = A(a†a + 1/2) + (B+ a†² + B- a²)/2.
struct OneModeForm {
    cplx a_coeff;  // A
    cplx b_plus;   // B+
    cplx b_minus;  // B-
};

/// Coefficients of H = (A~- P² + A~+ Q² + B~(QP+PQ))/2.
struct CoordinateForm {
    cplx a_tilde_plus;
    cplx a_tilde_minus;
    cplx b_tilde;
};

/// N-mode quadratic form: N×N matrix A and symmetric N×N matrices B±.
struct MultiModeForm {
    Eigen::MatrixXcd a_matrix;
    Eigen::MatrixXcd b_plus_matrix;
    Eigen::MatrixXcd b_minus_matrix;

    int n_modes() const { return static_cast<int>(a_matrix.rows()); }
};

struct PhaseNormalized {
    OneModeForm form;   // A real >= 0, B± with a common phase in (-pi, pi]
    cplx global_phase;  // unit modulus
    cplx mode_phase;    // unit modulus, the e^{i phi} of a -> e^{i phi} a
};

/// Rotates the form so that A is real non-negative and B± share a common phase.
/// Convention: when either B± vanishes the mode phase is the identity; when
/// A = 0 the global phase is taken from arg(B+ B-)/2 (or from the single
/// nonzero coefficient).
PhaseNormalized normalize_phase(const OneModeForm& form);

/// Inverse of normalize_phase: reconstructs the original triple.
OneModeForm denormalize_phase(const PhaseNormalized& pn);

/// A~± = A ± (B+ + B-)/2,  B~ = (B+ - B-)/(2i).
CoordinateForm to_coordinate(const OneModeForm& form);
OneModeForm from_coordinate(const CoordinateForm& cform);

/// Builds the N×N form with the given blocks, symmetrizing B± as (B+Bᵀ)/2.
/// Warns on stderr if the asymmetry exceeds 1e-10 relative.
MultiModeForm make_multimode(const Eigen::MatrixXcd& a,
                             const Eigen::MatrixXcd& b_plus,
                             const Eigen::MatrixXcd& b_minus);

MultiModeForm embed_one_mode(const OneModeForm& form);

/// The assembled 2N×2N block matrix [[A, B+], [B-, Aᵀ]].
Eigen::MatrixXcd assemble_h_matrix(const MultiModeForm& form);

/// Max-norm of 𝓗ᵀ - R𝓗R for the assembled matrix (0 for a valid form).
double h_matrix_symmetry_residual(const MultiModeForm& form);

} // namespace bosonspec
