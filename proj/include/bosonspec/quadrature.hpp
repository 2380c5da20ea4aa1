/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <functional>
#include <string>

#include "bosonspec/forms.hpp"
#include "bosonspec/types.hpp"
#include "bosonspec/wavefunctions.hpp"

namespace bosonspec {

enum class QuadRule { TanhSinh, Trapezoid };

struct QuadratureGrid {
    double half_width = 0.0;
    int points = 0;
    QuadRule rule = QuadRule::TanhSinh;
};

/// Integral of f over [-L, L]; tanh-sinh by default, uniform trapezoid as a
/// cross-check rule.
cplx integrate(const std::function<cplx(double)>& f, double half_width,
               QuadRule rule = QuadRule::TanhSinh, int trap_points = 4001);

/// Half-width at which |conj(bra) * ket| has decayed below eps relative to
/// its maximum (scanned outward; capped at 60).
double overlap_half_width(const Wavefunction& bra, const Wavefunction& ket,
                          double eps = 1e-18);

/// integral conj(bra(x)) ket(x) dx with automatic half-width.
cplx inner_product(const Wavefunction& bra, const Wavefunction& ket,
                   QuadRule rule = QuadRule::TanhSinh);

/// <m_b̄ | n_b> for the given form with normalized vacua; delta_mn in exact
/// arithmetic.  Valid in region I; on the border I-II the dual family is
/// distributional and the value is obtained as the limit of integrals at
/// B± (1 - eps), extrapolated to eps = 0.
cplx inner_biorthogonal(const OneModeForm& form, int m, int n, double tol = 1e-9);

struct ResidualReport {
    double max_rel_residual = 0.0;
    QuadratureGrid grid;
    cplx energy{0.0, 0.0};
    double max_abs_psi = 0.0;
};

/// Residual of the second-order coordinate equation
///   -A~-/2 psi'' - i B~ (x psi' + psi/2) + A~+/2 x² psi = E psi
/// on a uniform grid, using the analytic derivatives; for adjoint families
/// the coefficients are conjugated.  Pointwise relative to max(|E psi|,
/// 1e-300), maximized over points with |psi| > 1e-12 max|psi|.
ResidualReport schrodinger_residual(const Wavefunction& wf, double half_width = 5.0,
                                    int points = 201);

struct OverlapReport {
    double branch_ratio = 0.0;     // |(A - lambda)/(A + lambda)|
    cplx overlap{0.0, 0.0};        // quadrature value of <0_b̄|0_b>
    double closed_form_error = 0.0;  // |overlap - 1|
    double doubling_change = 0.0;    // relative change when widening the range
};

/// Convergence checks on the vacuum overlap: the branch inequality
/// |(A-lambda)/(A+lambda)| <= 1 and the quadrature value against the
/// closed form <0_b̄|0_b> = 1 for normalized vacua.
OverlapReport overlap_convergence(const OneModeForm& form, double tol = 1e-9);

} // namespace bosonspec
