/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "bosonspec/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace bosonspec {

OneModeForm sweep_form(const SweepConfig& cfg, double bp, double bm) {
    if (cfg.plane == SweepPlane::RealBpm) {
        return OneModeForm{cplx(cfg.a, 0.0), cplx(bp, 0.0), cplx(bm, 0.0)};
    }
    const cplx phase = std::exp(cplx(0.0, cfg.theta));
    return OneModeForm{cplx(cfg.a, 0.0), bp * phase, bm * phase};
}

namespace {

int worker_count(const SweepConfig& cfg) {
    if (cfg.workers > 0) return cfg.workers;
    if (const char* env = std::getenv("BOSONSPEC_WORKERS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

// Re(B+ B- - A²) along the plane; the lambda = 0 curve is its zero set
// (for the modulus plane only when e^{2i theta} is real).
bool crossing_possible(const SweepConfig& cfg) {
    if (cfg.plane == SweepPlane::RealBpm) return true;
    return std::abs(std::sin(2.0 * cfg.theta)) < 1e-12;
}

double curve_fn(const SweepConfig& cfg, double bp, double bm) {
    const double c = (cfg.plane == SweepPlane::RealBpm) ? 1.0 : std::cos(2.0 * cfg.theta);
    return c * bp * bm - cfg.a * cfg.a;
}

} // namespace

SweepResult run_sweep(const SweepConfig& cfg) {
    if (cfg.resolution < 2) throw std::invalid_argument("run_sweep: resolution must be >= 2");
    const int n = cfg.resolution;
    const double hp = (cfg.bp_max - cfg.bp_min) / (n - 1);
    const double hm = (cfg.bm_max - cfg.bm_min) / (n - 1);
    const bool check_curve = crossing_possible(cfg);

    SweepResult result;
    result.config = cfg;
    result.cells.resize(static_cast<std::size_t>(n) * n);

    std::atomic<int> next_row{0};
    auto work = [&]() {
        for (;;) {
            const int i = next_row.fetch_add(1);
            if (i >= n) return;
            const double bp = cfg.bp_min + i * hp;
            for (int j = 0; j < n; ++j) {
                const double bm = cfg.bm_min + j * hm;
                SweepCell cell;
                cell.bp = bp;
                cell.bm = bm;
                const OneModeForm f = sweep_form(cfg, bp, bm);
                cell.lambda = lambda_of(f);
                cell.code = region_code(classify(f, cfg.tol).label);
                if (check_curve && cell.code != 0 && cell.code != -5) {
                    // flag cells whose half-spacing box crosses lambda = 0
                    const double c00 = curve_fn(cfg, bp - hp / 2, bm - hm / 2);
                    const double c01 = curve_fn(cfg, bp - hp / 2, bm + hm / 2);
                    const double c10 = curve_fn(cfg, bp + hp / 2, bm - hm / 2);
                    const double c11 = curve_fn(cfg, bp + hp / 2, bm + hm / 2);
                    const double lo = std::min({c00, c01, c10, c11});
                    const double hi = std::max({c00, c01, c10, c11});
                    if (lo <= 0.0 && hi >= 0.0) {
                        // side convention mirrors the classifier's lambda = 0
                        // labels: |B-| > |B+| is the II side, the reverse III
                        if (std::abs(bm) > std::abs(bp)) {
                            cell.code = -3;
                        } else if (std::abs(bp) > std::abs(bm)) {
                            cell.code = -4;
                        } else {
                            cell.code = -5;
                        }
                    }
                }
                result.cells[static_cast<std::size_t>(i) * n + j] = cell;
            }
        }
    };
    const int workers = std::min(worker_count(cfg), n);
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }
    return result;
}

} // namespace bosonspec
