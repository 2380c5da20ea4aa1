/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "bosonspec/forms.hpp"
#include "bosonspec/types.hpp"

namespace bosonspec {

/// [[A, B+], [-B-, -Aᵀ]]; eigenvalues come in ±lambda pairs.
Eigen::MatrixXcd commutator_matrix_nd(const MultiModeForm& form);

/// The antisymmetric pairing form J = RM = [[0, -1], [1, 0]] (N-blocks).
Eigen::MatrixXcd pairing_form(int n_modes);

struct JordanCluster {
    cplx eigenvalue;
    int algebraic = 0;
    int geometric = 0;
    std::vector<int> block_sizes;  // descending
};

struct JordanInfo {
    bool diagonalizable = true;
    int largest_block = 1;
    std::vector<JordanCluster> clusters;
};

/// Clusters the spectrum and compares algebraic vs geometric multiplicities
/// via SVD ranks of (M - lambda)^k; handles the diagonalizable lambda = 0 case.
JordanInfo detect_jordan(const Eigen::MatrixXcd& m, double tol = 1e-8);

struct EigenPairs {
    Eigen::VectorXcd lambdas;  // branch Re >= 0, tie Im >= 0; sorted
    Eigen::MatrixXcd p;        // columns Z_i  (+lambda_i)
    Eigen::MatrixXcd q;        // columns Z_ī (-lambda_i), scaled so QᵀJP = 1
};

/// Eigen-decomposition of the commutator matrix grouped into ±lambda partners
/// with the symplectic scaling; zero clusters are paired by symplectic
/// Gram-Schmidt.  Throws NonDiagonalizableError on defective input.
EigenPairs eigen_pairs(const Eigen::MatrixXcd& m, double tol = 1e-9);

struct SymplecticW {
    Eigen::MatrixXcd u, v, ubar_star, vbar_star;

    Eigen::MatrixXcd assembled() const;  // [[U, V], [V̄*, Ū*]]
    Eigen::MatrixXcd inverse() const;    // M R Wᵀ R M
    /// Max-norm residuals of the defining constraints:
    /// [0] WᵀJW - J, [1] U Ū*ᵀ - V V̄*ᵀ - 1, [2] V Uᵀ - U Vᵀ, [3] V̄ Ūᵀ - Ū V̄ᵀ.
    std::array<double, 4> constraint_residuals() const;
};

SymplecticW build_w(const EigenPairs& pairs);

struct VacuumReport {
    Eigen::VectorXd sigma;      // singular values of U⁻¹V
    Eigen::VectorXd sigma_bar;  // singular values of Ū⁻¹V̄
    bool b_vacuum_exists = false;
    bool bbar_vacuum_exists = false;
    bool u_singular = false;
    bool ubar_singular = false;
    double symmetry_residual = 0.0;  // max asymmetry of the two kernels
};

VacuumReport vacuum_existence(const SymplecticW& w);

struct NormalModeDecomposition {
    Eigen::VectorXcd lambdas;
    SymplecticW w;
    bool diagonalizable = false;
    JordanInfo jordan;
    VacuumReport vacuum;
    double offdiag_residual = 0.0;  // of 𝓗' = M W M𝓗 W⁻¹
    double diag_residual = 0.0;     // |diag(𝓗') - (lambda, lambda)|
};

/// Full pipeline; on non-diagonalizable input returns diagonalizable = false
/// with the Jordan report and no W.
NormalModeDecomposition decompose(const MultiModeForm& form, double tol = 1e-9);

} // namespace bosonspec
