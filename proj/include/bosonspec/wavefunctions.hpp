/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "bosonspec/forms.hpp"
#include "bosonspec/normal_modes.hpp"
#include "bosonspec/types.hpp"

namespace bosonspec {

/// Coordinate-representation coefficients (alpha, beta) = u ± v,
/// (ᾱ, β̄) = ū ± v̄, gamma = sqrt(beta β̄*).
struct GreekCoeffs {
    cplx alpha;
    cplx beta;
    cplx alpha_bar;
    cplx beta_bar;
    cplx gamma;

    cplx alpha_bar_star() const { return std::conj(alpha_bar); }
    cplx beta_bar_star() const { return std::conj(beta_bar); }
};

/// Throws DegenerateError when beta or β̄ vanish exactly (the corresponding
/// vacuum collapses; border families handle the limit themselves).
GreekCoeffs greek_coeffs(const BogoliubovCoeffs& b);

enum class Family {
    VacuumB,
    VacuumBbar,
    ExcitedB,          // n
    ExcitedBbar,       // m
    ContinuousB,       // nu
    ContinuousBbarDag, // nu
    NegativeBand,      // n
    Border,            // nu
    Coherent,          // alpha_c
};

std::string family_name(Family f);

struct WaveSpec {
    Family family;
    int n = 0;
    cplx nu{0.0, 0.0};
    cplx alpha_c{0.0, 0.0};
};

/// An eigenfunction evaluator with analytic derivatives.
class Wavefunction {
  public:
    /// (psi, psi', psi'') at x.
    std::array<cplx, 3> eval3(double x) const { return eval3_(x); }
    cplx operator()(double x) const { return eval3_(x)[0]; }

    cplx energy() const { return energy_; }
    /// True for families solving the adjoint (conjugated-coefficient) equation.
    bool adjoint() const { return adjoint_; }
    const WaveSpec& spec() const { return spec_; }
    const OneModeForm& form() const { return form_; }
    const GreekCoeffs& coeffs() const { return coeffs_; }

    friend Wavefunction make_wavefunction(const OneModeForm&, const WaveSpec&, bool, double);

  private:
    std::function<std::array<cplx, 3>(double)> eval3_;
    cplx energy_{0.0, 0.0};
    bool adjoint_ = false;
    WaveSpec spec_{};
    OneModeForm form_{};
    GreekCoeffs coeffs_{};
};

/// Builds the requested eigenfunction family.  With enforce_region the form
/// is classified first and a RegionMismatchError is thrown when the family is
/// not valid there (tests probe divergent combinations with it disabled).
Wavefunction make_wavefunction(const OneModeForm& form, const WaveSpec& spec,
                               bool enforce_region = true, double tol = 1e-9);

enum class LadderOp { B, BbarDagger };

struct SampledFunction {
    std::vector<double> x;
    std::vector<cplx> values;
};

/// Applies the first-order operator b = (alpha x + beta d/dx)/sqrt(2) or
/// b̄† = (ᾱ* x - β̄* d/dx)/sqrt(2) to the function sampled on a uniform grid,
/// using five-point finite differences.  Throws AccuracyError when the grid
/// is too coarse for the derivative (three- vs five-point disagreement).
SampledFunction ladder_apply(LadderOp op, const Wavefunction& wf,
                             const std::vector<double>& grid);

} // namespace bosonspec
