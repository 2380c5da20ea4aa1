/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "bosonspec/forms.hpp"

#include <cmath>
#include <cstdio>

namespace bosonspec {

namespace {

cplx unit_phase(cplx z) {
    double m = std::abs(z);
    return m > 0.0 ? z / m : cplx(1.0, 0.0);
}

} // namespace

PhaseNormalized normalize_phase(const OneModeForm& form) {
    const cplx a = form.a_coeff, bp = form.b_plus, bm = form.b_minus;

    cplx g(1.0, 0.0);
    if (std::abs(a) > 0.0) {
        g = unit_phase(a);
    } else if (std::abs(bp) > 0.0 && std::abs(bm) > 0.0) {
        // A = 0 convention: split arg(B+ B-) evenly.
        g = std::polar(1.0, std::arg(bp * bm) / 2.0);
    } else if (std::abs(bp) > 0.0) {
        g = unit_phase(bp);
    } else if (std::abs(bm) > 0.0) {
        g = unit_phase(bm);
    }

    cplx bpg = bp / g, bmg = bm / g;
    cplx p(1.0, 0.0);
    if (std::abs(bpg) > 0.0 && std::abs(bmg) > 0.0) {
        // Choose phi with B+ -> p^2 B+, B- -> B-/p^2 so both args coincide.
        double phi = (std::arg(bmg) - std::arg(bpg)) / 4.0;
        p = std::polar(1.0, phi);
    }

    PhaseNormalized out;
    out.form.a_coeff = cplx(std::abs(a), 0.0);
    out.form.b_plus = p * p * bpg;
    out.form.b_minus = bmg / (p * p);
    out.global_phase = g;
    out.mode_phase = p;
    return out;
}

OneModeForm denormalize_phase(const PhaseNormalized& pn) {
    const cplx g = pn.global_phase, p2 = pn.mode_phase * pn.mode_phase;
    return OneModeForm{g * pn.form.a_coeff, g * pn.form.b_plus / p2,
                       g * pn.form.b_minus * p2};
}

CoordinateForm to_coordinate(const OneModeForm& form) {
    const cplx s = (form.b_plus + form.b_minus) / 2.0;
    return CoordinateForm{form.a_coeff + s, form.a_coeff - s,
                          (form.b_plus - form.b_minus) / cplx(0.0, 2.0)};
}

OneModeForm from_coordinate(const CoordinateForm& c) {
    const cplx a = (c.a_tilde_plus + c.a_tilde_minus) / 2.0;
    const cplx half_sum = (c.a_tilde_plus - c.a_tilde_minus) / 2.0;
    const cplx ib = cplx(0.0, 1.0) * c.b_tilde;
    return OneModeForm{a, half_sum + ib, half_sum - ib};
}

MultiModeForm make_multimode(const Eigen::MatrixXcd& a,
                             const Eigen::MatrixXcd& b_plus,
                             const Eigen::MatrixXcd& b_minus) {
    auto symmetrize = [](const Eigen::MatrixXcd& m, const char* name) {
        Eigen::MatrixXcd s = (m + m.transpose()) / 2.0;
        double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
        double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
        if (asym > 1e-10 * scale) {
            std::fprintf(stderr,
                         "warning: %s asymmetry %.3e exceeds 1e-10, keeping symmetric part\n",
                         name, asym);
        }
        return s;
    };
    MultiModeForm f;
    f.a_matrix = a;
    f.b_plus_matrix = symmetrize(b_plus, "B+");
    f.b_minus_matrix = symmetrize(b_minus, "B-");
    return f;
}

MultiModeForm embed_one_mode(const OneModeForm& form) {
    Eigen::MatrixXcd a(1, 1), bp(1, 1), bm(1, 1);
    a(0, 0) = form.a_coeff;
    bp(0, 0) = form.b_plus;
    bm(0, 0) = form.b_minus;
    return MultiModeForm{a, bp, bm};
}

Eigen::MatrixXcd assemble_h_matrix(const MultiModeForm& form) {
    const int n = form.n_modes();
    Eigen::MatrixXcd h(2 * n, 2 * n);
    h.topLeftCorner(n, n) = form.a_matrix;
    h.topRightCorner(n, n) = form.b_plus_matrix;
    h.bottomLeftCorner(n, n) = form.b_minus_matrix;
    h.bottomRightCorner(n, n) = form.a_matrix.transpose();
    return h;
}

double h_matrix_symmetry_residual(const MultiModeForm& form) {
    const int n = form.n_modes();
    Eigen::MatrixXcd h = assemble_h_matrix(form);
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    r.topRightCorner(n, n) = Eigen::MatrixXcd::Identity(n, n);
    r.bottomLeftCorner(n, n) = Eigen::MatrixXcd::Identity(n, n);
    return (h.transpose() - r * h * r).cwiseAbs().maxCoeff();
}

} // namespace bosonspec
