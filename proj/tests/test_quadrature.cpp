/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include <doctest.h>

#include <cmath>

#include "bosonspec/normal_modes.hpp"
#include "bosonspec/quadrature.hpp"
#include "bosonspec/wavefunctions.hpp"
#include "test_helpers.hpp"

using namespace bosonspec;
using bosonspec::testing::random_form;

namespace {

const OneModeForm kRegionI{cplx(1, 0), cplx(0.5, 0), cplx(0.3, 0)};
const OneModeForm kRegionIc{cplx(1, 0), cplx(0.2, 0.3), cplx(0.1, -0.25)};
const OneModeForm kBorderI_II{cplx(1, 0), cplx(0.5, 0), cplx(1.5, 0)};

} // namespace

TEST_CASE("integrate: gaussian moments under both rules") {
    const auto gauss = [](double x) { return cplx(std::exp(-x * x), 0.0); };
    const double root_pi = std::sqrt(kPi);
    CHECK(std::abs(integrate(gauss, 8.0) - root_pi) < 1e-13);
    CHECK(std::abs(integrate(gauss, 8.0, QuadRule::Trapezoid) - root_pi) < 1e-12);
    const auto moment = [](double x) {
        return cplx(x * x * std::exp(-x * x), 0.0);
    };
    CHECK(std::abs(integrate(moment, 8.0) - root_pi / 2.0) < 1e-13);
    // complex weight
    const auto cw = [](double x) {
        return std::exp(cplx(-1.0, 0.4) * x * x);
    };
    const cplx expect = std::sqrt(kPi / cplx(1.0, -0.4));
    CHECK(std::abs(integrate(cw, 10.0) - expect) < 1e-12);
}

TEST_CASE("overlap half-width covers the decay of the product") {
    const Wavefunction bra = make_wavefunction(kRegionI, {Family::VacuumBbar});
    const Wavefunction ket = make_wavefunction(kRegionI, {Family::VacuumB});
    const double hw = overlap_half_width(bra, ket);
    CHECK(hw > 2.0);
    CHECK(hw <= 60.0);
    const double tail = std::abs(std::conj(bra(hw)) * ket(hw));
    double peak = 0.0;
    for (double x = -3.0; x <= 3.0; x += 0.1) {
        peak = std::max(peak, std::abs(std::conj(bra(x)) * ket(x)));
    }
    CHECK(tail < 1e-12 * peak);
}

TEST_CASE("biorthogonality in region I: <m_bbar|n_b> = delta_mn") {
    for (const OneModeForm* f : {&kRegionI, &kRegionIc}) {
        for (int m = 0; m <= 3; ++m) {
            for (int n = 0; n <= 3; ++n) {
                const cplx val = inner_biorthogonal(*f, m, n);
                const double expect = (m == n) ? 1.0 : 0.0;
                CHECK(std::abs(val - expect) < 1e-9);
            }
        }
    }
}

TEST_CASE("biorthogonality at the I-II border via the regulated limit") {
    for (int m = 0; m <= 2; ++m) {
        for (int n = 0; n <= 2; ++n) {
            const cplx val = inner_biorthogonal(kBorderI_II, m, n);
            const double expect = (m == n) ? 1.0 : 0.0;
            CHECK(std::abs(val - expect) < 1e-6);
        }
    }
}

TEST_CASE("trapezoid cross-checks tanh-sinh on the vacuum overlap") {
    const Wavefunction bra = make_wavefunction(kRegionIc, {Family::VacuumBbar});
    const Wavefunction ket = make_wavefunction(kRegionIc, {Family::VacuumB});
    const cplx a = inner_product(bra, ket);
    const cplx b = inner_product(bra, ket, QuadRule::Trapezoid);
    CHECK(std::abs(a - b) < 1e-10 * std::max(1.0, std::abs(a)));
    CHECK(std::abs(a - 1.0) < 1e-10);
}

TEST_CASE("overlap convergence: branch ratio bounded by one, closed form") {
    // the branch inequality |(A-lambda)/(A+lambda)| <= 1 is a property of the
    // phase-normalized representative (A real >= 0)
    std::mt19937 rng(45);
    int tested = 0;
    for (int i = 0; i < 1200 && tested < 500; ++i) {
        const OneModeForm f = normalize_phase(random_form(rng)).form;
        if (std::abs(lambda_of(f)) < 5e-2) continue;
        ++tested;
        const OverlapReport rep = overlap_convergence(f);
        CHECK(rep.branch_ratio <= 1.0 + 1e-9);
        const Region r = classify(f).label;
        if (r == Region::I) {
            CHECK(rep.closed_form_error < 1e-8);
            CHECK(rep.doubling_change < 1e-8);
        }
    }
    CHECK(tested == 500);
}

TEST_CASE("region II: the divergent vacuum overlap is diagnosed, not hidden") {
    const OneModeForm f{cplx(1, 0), cplx(0.3, 0), cplx(3, 0)};
    const OverlapReport rep = overlap_convergence(f);
    CHECK(rep.branch_ratio <= 1.0 + 1e-9);
    // the b̄ vacuum grows in region II: the product is non-normalizable
    CHECK_FALSE(std::isfinite(rep.closed_form_error));
}

TEST_CASE("schrodinger residual report carries grid and energy") {
    const Wavefunction wf = make_wavefunction(kRegionI, {Family::VacuumB});
    const ResidualReport rep = schrodinger_residual(wf);
    CHECK(rep.grid.points == 201);
    CHECK(rep.grid.half_width == doctest::Approx(5.0));
    CHECK(std::abs(rep.energy - wf.energy()) < 1e-15);
    CHECK(rep.max_abs_psi > 0.0);
    CHECK(rep.max_rel_residual < 1e-10);
}
