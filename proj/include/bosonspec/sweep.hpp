/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <vector>

#include "bosonspec/forms.hpp"
#include "bosonspec/normal_modes.hpp"
#include "bosonspec/types.hpp"

namespace bosonspec {

enum class SweepPlane { RealBpm, Modulus };

struct SweepConfig {
    SweepPlane plane = SweepPlane::RealBpm;
    double a = 1.0;
    double bp_min = -4.0, bp_max = 4.0;
    double bm_min = -4.0, bm_max = 4.0;
    int resolution = 201;  // per axis
    double theta = 0.0;    // common B± phase in the modulus plane
    double tol = 1e-9;
    int workers = 0;  // 0: BOSONSPEC_WORKERS env or hardware concurrency
};

struct SweepCell {
    double bp = 0.0, bm = 0.0;  // coordinates (values or moduli)
    int code = 0;
    cplx lambda{0.0, 0.0};
};

struct SweepResult {
    SweepConfig config;
    std::vector<SweepCell> cells;  // bp-major, bm minor

    const SweepCell& at(int i, int j) const { return cells[i * config.resolution + j]; }
};

/// The form at grid coordinates (bp, bm) under the configured plane.
OneModeForm sweep_form(const SweepConfig& cfg, double bp, double bm);

/// Classifies every grid point, partitioned across a worker pool.  Cells
/// whose surrounding half-spacing box crosses the lambda = 0 curve carry the
/// corresponding non-diagonalizable code instead of the open-region one.
SweepResult run_sweep(const SweepConfig& cfg);

} // namespace bosonspec
