/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "bosonspec/normal_modes.hpp"

#include <cmath>

namespace bosonspec {

std::string region_name(Region r) {
    switch (r) {
        case Region::I: return "I";
        case Region::II: return "II";
        case Region::III: return "III";
        case Region::BorderI_II: return "BorderI_II";
        case Region::BorderI_III: return "BorderI_III";
        case Region::NonDiagII: return "NonDiagII";
        case Region::NonDiagIII: return "NonDiagIII";
        case Region::CriticalHermitian: return "CriticalHermitian";
        case Region::ZeroForm: return "ZeroForm";
    }
    return "?";
}

int region_code(Region r) {
    switch (r) {
        case Region::I: return 1;
        case Region::II: return 2;
        case Region::III: return 3;
        case Region::BorderI_II: return -1;
        case Region::BorderI_III: return -2;
        case Region::NonDiagII: return -3;
        case Region::NonDiagIII: return -4;
        case Region::CriticalHermitian: return -5;
        case Region::ZeroForm: return 0;
    }
    return -99;
}

cplx lambda_of(const OneModeForm& f) {
    cplx lam = std::sqrt(f.a_coeff * f.a_coeff - f.b_plus * f.b_minus);
    if (lam.real() < 0.0 || (lam.real() == 0.0 && lam.imag() < 0.0)) lam = -lam;
    return lam;
}

namespace {

double lambda_scale(const OneModeForm& f) {
    return std::abs(f.a_coeff) + std::sqrt(std::abs(f.b_plus * f.b_minus));
}

} // namespace

BogoliubovCoeffs bogoliubov(const OneModeForm& f, double tol) {
    const cplx lam = lambda_of(f);
    if (std::abs(lam) <= tol * lambda_scale(f)) {
        throw NonDiagonalizableError("bogoliubov: lambda = 0 (rank-1 form, no normal mode)");
    }
    BogoliubovCoeffs c;
    c.lambda = lam;
    c.u = std::sqrt((f.a_coeff + lam) / (2.0 * lam));
    c.ubar_star = c.u;
    // Sign constraints 2 lambda ū* v = B+ and 2 lambda u v̄* = B- hold by
    // construction; det1 follows from lambda² = A² - B+ B-.
    c.v = f.b_plus / (2.0 * lam * c.u);
    c.vbar_star = f.b_minus / (2.0 * lam * c.u);
    return c;
}

std::array<std::array<cplx, 2>, 2> commutator_matrix(const OneModeForm& f) {
    return {{{f.a_coeff, f.b_plus}, {-f.b_minus, -f.a_coeff}}};
}

TransformedForm transform_form(const OneModeForm& f, const BogoliubovCoeffs& c) {
    const cplx a = f.a_coeff, bp = f.b_plus, bm = f.b_minus;
    TransformedForm t;
    t.a_prime = a * (c.u * c.ubar_star + c.v * c.vbar_star) - bp * c.u * c.vbar_star -
                bm * c.ubar_star * c.v;
    t.b_plus_prime = bp * c.u * c.u + bm * c.v * c.v - 2.0 * a * c.u * c.v;
    t.b_minus_prime = bm * c.ubar_star * c.ubar_star + bp * c.vbar_star * c.vbar_star -
                      2.0 * a * c.ubar_star * c.vbar_star;
    return t;
}

RegionClass classify(const OneModeForm& f, double tol) {
    const double ap = std::abs(f.a_coeff), bpp = std::abs(f.b_plus), bmm = std::abs(f.b_minus);
    if (std::max({ap, bpp, bmm}) <= tol) {
        return RegionClass{Region::ZeroForm, 0.0, 0.0};
    }

    const cplx lam = lambda_of(f);
    if (std::abs(lam) <= tol * lambda_scale(f)) {
        // lambda = 0 curve: H is the square of a single linear combination.
        if (std::abs(bpp - bmm) <= tol * std::max(bpp, bmm)) {
            return RegionClass{Region::CriticalHermitian, 1.0, 1.0};
        }
        if (bpp < bmm) return RegionClass{Region::NonDiagII, 1.0, 1.0};
        return RegionClass{Region::NonDiagIII, 1.0, 1.0};
    }

    const BogoliubovCoeffs c = bogoliubov(f, tol);
    const double rv = c.ratio_v(), rvb = c.ratio_vbar();
    const bool v_on = std::abs(rv - 1.0) <= tol;
    const bool vb_on = std::abs(rvb - 1.0) <= tol;

    RegionClass out{Region::I, rv, rvb};
    if (v_on && vb_on) {
        out.label = Region::CriticalHermitian;
    } else if (vb_on) {
        out.label = Region::BorderI_II;
        const cplx z = (c.v_bar() / c.u_bar()) * (c.v_bar() / c.u_bar());
        out.conditional_note = std::abs(z - 1.0) > tol;
    } else if (v_on) {
        out.label = Region::BorderI_III;
        const cplx z = (c.v / c.u) * (c.v / c.u);
        out.conditional_note = std::abs(z - 1.0) > tol;
    } else if (rv < 1.0 && rvb < 1.0) {
        out.label = Region::I;
    } else if (rv < 1.0) {
        out.label = Region::II;
    } else if (rvb < 1.0) {
        out.label = Region::III;
    } else {
        // Excluded by det1 and the branch Re(lambda) >= 0; reaching this
        // means the branch convention was violated upstream.
        throw std::logic_error("classify: both |v/u| > 1 and |v̄/ū| > 1");
    }
    return out;
}

std::optional<bool> region_one_condition(const OneModeForm& f, double tol) {
    const cplx lam2 = f.a_coeff * f.a_coeff - f.b_plus * f.b_minus;
    const double scale = std::max(1.0, std::abs(lam2));
    // Applies only when lambda is real: lambda² real and >= 0.
    if (std::abs(lam2.imag()) > tol * scale || lam2.real() < -tol * scale) {
        return std::nullopt;
    }
    // 𝓗 + 𝓗† = [[2 Re A, B+ + B-*], [(B+ + B-*)*, 2 Re A]] > 0.
    const double diag = 2.0 * f.a_coeff.real();
    const double off = std::abs(f.b_plus + std::conj(f.b_minus));
    return diag > 0.0 && off < diag;
}

} // namespace bosonspec
