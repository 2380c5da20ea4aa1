/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <utility>

#include "bosonspec/types.hpp"

namespace bosonspec {

/// Complex number in scaled form m * exp(e), used to keep Hermite-function
/// intermediates inside the double range.
struct ScaledC {
    cplx mantissa{0.0, 0.0};
    double exponent = 0.0;

    static ScaledC from(cplx z);
    ScaledC normalized() const;
    cplx value() const;       // throws OverflowError if it does not fit
    cplx log() const;         // log(mantissa) + exponent
    bool is_zero() const { return mantissa == cplx(0.0, 0.0); }
};

/// Gamma function for complex argument (Lanczos + reflection).
/// Throws PoleError at non-positive integers (within 1e-12).
cplx gamma_c(cplx z);

/// log Gamma up to multiples of 2*pi*i (the branch is unspecified).
cplx lgamma_c(cplx z);

/// 1/Gamma(z); zero at the poles instead of throwing.
cplx rgamma_c(cplx z);

/// Hermite function H_nu(z): the solution of phi'' - 2z phi' + 2 nu phi = 0
/// that reduces to the Hermite polynomial for nu = 0, 1, 2, ... and behaves
/// as (2z)^nu for |arg z| < 3pi/4.
cplx hermite_nu(cplx nu, cplx z);

/// Joint evaluation of (H_nu(z), H_nu(-z)); shares the power series when the
/// series path applies.
std::pair<cplx, cplx> hermite_nu_pair(cplx nu, cplx z);

/// Scaled evaluation for arguments where the plain value overflows.
ScaledC hermite_nu_scaled(cplx nu, cplx z);

/// log H_nu(z) (principal log of the mantissa plus the scale).
cplx hermite_nu_log(cplx nu, cplx z);

/// Normalization factor: sqrt((|nu|-1)!) for nu in {-1, -2, ...},
/// 1/sqrt(Gamma(nu+1)) otherwise.  Negative integers detected within 1e-12.
cplx xi(cplx nu);

} // namespace bosonspec
