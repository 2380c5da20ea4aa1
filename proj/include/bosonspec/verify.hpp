/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <string>
#include <vector>

#include "bosonspec/forms.hpp"
#include "bosonspec/types.hpp"

namespace bosonspec {

struct InvariantResult {
    std::string name;
    bool pass = false;
    double residual = 0.0;
};

/// Runs the region-appropriate invariant suite at one parameter point:
/// algebraic identities of the transformation, vacuum-series verdicts vs the
/// classifier, wavefunction residuals and biorthogonality where defined.
std::vector<InvariantResult> verify_point(const OneModeForm& form, double tol = 1e-9);

} // namespace bosonspec
