/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace bosonspec {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Requested operation needs a diagonalizable form but lambda = 0.
struct NonDiagonalizableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A coefficient that must be nonzero vanished (e.g. beta = 0: vacuum collapses).
struct DegenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A wavefunction family was requested outside its region of validity.
struct RegionMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Gamma function evaluated at a non-positive integer.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Intermediate value exceeded the double floating range.
struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numerical accuracy check failed (quadrature or finite differences).
struct AccuracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace bosonspec
