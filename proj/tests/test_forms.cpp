/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include <doctest.h>

#include <cmath>

#include "bosonspec/forms.hpp"
#include "bosonspec/normal_modes.hpp"
#include "test_helpers.hpp"

using namespace bosonspec;
using bosonspec::testing::random_form;

namespace {

double form_distance(const OneModeForm& a, const OneModeForm& b) {
    return std::max({std::abs(a.a_coeff - b.a_coeff), std::abs(a.b_plus - b.b_plus),
                     std::abs(a.b_minus - b.b_minus)});
}

} // namespace

TEST_CASE("coordinate form round trip and printed map") {
    const OneModeForm f{cplx(1.2, 0.3), cplx(0.4, -0.2), cplx(-0.7, 0.5)};
    const CoordinateForm cf = to_coordinate(f);
    CHECK(std::abs(cf.a_tilde_plus - (f.a_coeff + (f.b_plus + f.b_minus) / 2.0)) < 1e-15);
    CHECK(std::abs(cf.a_tilde_minus - (f.a_coeff - (f.b_plus + f.b_minus) / 2.0)) < 1e-15);
    CHECK(std::abs(cf.b_tilde - (f.b_plus - f.b_minus) / cplx(0.0, 2.0)) < 1e-15);
    CHECK(form_distance(from_coordinate(cf), f) < 1e-15);

    // lambda agrees through the coordinate representation (Pythagorean form)
    const cplx lam2 = cf.a_tilde_plus * cf.a_tilde_minus - cf.b_tilde * cf.b_tilde;
    const cplx lam = lambda_of(f);
    CHECK(std::abs(lam * lam - lam2) < 1e-14);
}

TEST_CASE("phase normalization: A real nonnegative, common B phase, round trip") {
    std::mt19937 rng(91);
    for (int i = 0; i < 1000; ++i) {
        const OneModeForm f = random_form(rng);
        const PhaseNormalized pn = normalize_phase(f);
        CHECK(std::abs(pn.form.a_coeff.imag()) < 1e-14);
        CHECK(pn.form.a_coeff.real() >= -1e-14);
        CHECK(std::abs(std::abs(pn.global_phase) - 1.0) < 1e-14);
        CHECK(std::abs(std::abs(pn.mode_phase) - 1.0) < 1e-14);
        if (std::abs(pn.form.b_plus) > 1e-12 && std::abs(pn.form.b_minus) > 1e-12) {
            double dphi = std::arg(pn.form.b_plus) - std::arg(pn.form.b_minus);
            dphi = std::remainder(dphi, 2.0 * kPi);
            CHECK(std::abs(dphi) < 1e-10);
        }
        CHECK(form_distance(denormalize_phase(pn), f) < 1e-12);

        // classification is invariant under the mode-phase rotation
        // a -> e^{i phi} a, which keeps A fixed and maps B± -> e^{∓2i phi} B±
        if (std::abs(lambda_of(pn.form)) > 0.1) {
            const double phi = 0.37 + 0.001 * i;
            const cplx rot = std::exp(cplx(0.0, 2.0 * phi));
            const OneModeForm rotated{pn.form.a_coeff, pn.form.b_plus / rot,
                                      pn.form.b_minus * rot};
            const RegionClass a = classify(pn.form);
            const RegionClass b = classify(rotated);
            CHECK(a.label == b.label);
            CHECK(a.ratio_v == doctest::Approx(b.ratio_v).epsilon(1e-9));
            CHECK(a.ratio_vbar == doctest::Approx(b.ratio_vbar).epsilon(1e-9));
        }
    }
}

TEST_CASE("phase normalization conventions at the degenerate corners") {
    // A = 0, both B nonzero: global phase from arg(B+ B-)/2
    const PhaseNormalized pn =
        normalize_phase(OneModeForm{cplx(0.0, 0.0), cplx(0.0, 1.0), cplx(0.0, 1.0)});
    CHECK(std::abs(pn.form.a_coeff) < 1e-14);
    CHECK(form_distance(denormalize_phase(pn),
                        OneModeForm{cplx(0.0, 0.0), cplx(0.0, 1.0), cplx(0.0, 1.0)}) < 1e-12);

    // single nonzero B: mode phase stays the identity
    const PhaseNormalized pn2 =
        normalize_phase(OneModeForm{cplx(2.0, 0.0), cplx(0.3, 0.4), cplx(0.0, 0.0)});
    CHECK(std::abs(pn2.mode_phase - 1.0) < 1e-14);
}

TEST_CASE("multimode assembly: symmetrization and block symmetry") {
    Eigen::MatrixXcd a(2, 2), bp(2, 2), bm(2, 2);
    a << cplx(2, 0), cplx(0.3, 0.1), cplx(0.4, -0.1), cplx(1.5, 0);
    bp << cplx(0.2, 0), cplx(0.1, 0.05), cplx(0.1, 0.05), cplx(0.1, 0);
    bm << cplx(0.15, 0), cplx(0.05, 0), cplx(0.05, 0), cplx(0.08, 0);
    const MultiModeForm f = make_multimode(a, bp, bm);
    CHECK((f.b_plus_matrix - f.b_plus_matrix.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((f.b_minus_matrix - f.b_minus_matrix.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(h_matrix_symmetry_residual(f) < 1e-14);

    const Eigen::MatrixXcd h = assemble_h_matrix(f);
    CHECK(h.rows() == 4);
    CHECK(std::abs(h(0, 0) - a(0, 0)) < 1e-15);
    CHECK(std::abs(h(0, 2) - f.b_plus_matrix(0, 0)) < 1e-15);
    CHECK(std::abs(h(2, 0) - f.b_minus_matrix(0, 0)) < 1e-15);
    CHECK(std::abs(h(2, 2) - a(0, 0)) < 1e-15);  // Aᵀ block
}

TEST_CASE("embed_one_mode matches the scalar coefficients") {
    const OneModeForm f{cplx(1.0, 0.2), cplx(0.5, 0), cplx(0.3, 0)};
    const MultiModeForm m = embed_one_mode(f);
    CHECK(m.n_modes() == 1);
    CHECK(std::abs(m.a_matrix(0, 0) - f.a_coeff) < 1e-15);
    CHECK(std::abs(m.b_plus_matrix(0, 0) - f.b_plus) < 1e-15);
    CHECK(std::abs(m.b_minus_matrix(0, 0) - f.b_minus) < 1e-15);
}
