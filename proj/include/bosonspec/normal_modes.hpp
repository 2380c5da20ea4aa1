/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <array>
#include <optional>
#include <string>

#include "bosonspec/forms.hpp"
#include "bosonspec/types.hpp"

namespace bosonspec {

/// Entries of the transformation W = [[u, v], [v̄*, ū*]] mapping (a, a†) to
/// (b, b̄†), together with lambda.  Invariant: u ū* - v v̄* = 1.
struct BogoliubovCoeffs {
    cplx u;
    cplx v;
    cplx ubar_star;  // ū*
    cplx vbar_star;  // v̄*
    cplx lambda;

    cplx u_bar() const { return std::conj(ubar_star); }
    cplx v_bar() const { return std::conj(vbar_star); }
    double ratio_v() const { return std::abs(v / u); }
    double ratio_vbar() const { return std::abs(vbar_star / ubar_star); }
};

enum class Region {
    I,
    II,
    III,
    BorderI_II,
    BorderI_III,
    NonDiagII,
    NonDiagIII,
    CriticalHermitian,
    ZeroForm,
};

std::string region_name(Region r);

/// Integer code used in sweep output: 1/2/3 for the open regions, negative
/// for borders and the non-diagonalizable curve, 0 for the zero form.
int region_code(Region r);

struct RegionClass {
    Region label;
    double ratio_v;     // |v/u|
    double ratio_vbar;  // |v̄/ū|
    /// Set on border labels when the vacuum series converges only
    /// conditionally (|z| = 1, z != 1): no bounded vacuum is claimed there.
    bool conditional_note = false;
};

struct TransformedForm {
    cplx a_prime;
    cplx b_plus_prime;
    cplx b_minus_prime;
};

/// lambda = sqrt(A² - B+ B-), branch Re >= 0, ties broken by Im >= 0.
cplx lambda_of(const OneModeForm& form);

/// Coefficients u = ū* = sqrt((A+lambda)/2lambda), v = B+/(2 lambda u),
/// v̄* = B-/(2 lambda u).  Throws NonDiagonalizableError when |lambda| is
/// below tol relative to |A| + sqrt(|B+ B-|).
BogoliubovCoeffs bogoliubov(const OneModeForm& form, double tol = 1e-9);

/// The 2x2 matrix [[A, B+], [-B-, -A]] whose eigenvalues are ±lambda.
std::array<std::array<cplx, 2>, 2> commutator_matrix(const OneModeForm& form);

/// A', B'± after the Bogoliubov transformation (diagonal when coeffs come
/// from bogoliubov(form): A' = lambda, B'± = 0).
TransformedForm transform_form(const OneModeForm& form, const BogoliubovCoeffs& coeffs);

/// Spectral-region classification from the coefficient ratios.
RegionClass classify(const OneModeForm& form, double tol = 1e-9);

/// Positive definiteness of 𝓗 + 𝓗† (equivalent to |B+ + B-*| < 2A, strict).
/// Empty when lambda is not real (the criterion does not apply).
std::optional<bool> region_one_condition(const OneModeForm& form, double tol = 1e-9);

} // namespace bosonspec
