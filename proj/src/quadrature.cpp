/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "bosonspec/quadrature.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace bosonspec {

namespace {

cplx tanh_sinh(const std::function<cplx(double)>& f, double half_width) {
    const double L = half_width;
    auto sum_level = [&](double h, bool odd_only) {
        cplx s(0.0, 0.0);
        for (int dir = 0; dir < 2; ++dir) {
            int misses = 0;
            const int k0 = (dir == 0) ? (odd_only ? 1 : 0) : -1;
            const int dk = (dir == 0) ? 1 : -1;
            const int step = odd_only ? 2 * dk : dk;
            for (int k = k0; std::abs(k) < 20000; k += step) {
                const double u = k * h;
                const double sh = kPi / 2.0 * std::sinh(u);
                if (std::abs(sh) > 350.0) break;
                const double ch = std::cosh(sh);
                const double x = L * std::tanh(sh);
                const double w = L * kPi / 2.0 * std::cosh(u) / (ch * ch);
                const cplx term = f(x) * w;
                const double m = std::abs(term);
                if (!std::isfinite(m)) throw OverflowError("tanh_sinh: integrand overflow");
                s += term;
                if (m < 1e-18) {
                    if (++misses >= 3) break;
                } else {
                    misses = 0;
                }
            }
        }
        return s;
    };
    double h = 0.5;
    cplx total = sum_level(h, false) * h;
    for (int level = 0; level < 8; ++level) {
        h /= 2.0;
        const cplx refined = total / 2.0 + sum_level(h, true) * h;
        if (std::abs(refined - total) <= 1e-13 * std::abs(refined) + 1e-300 && level > 0) {
            return refined;
        }
        total = refined;
    }
    return total;
}

} // namespace

cplx integrate(const std::function<cplx(double)>& f, double half_width, QuadRule rule,
               int trap_points) {
    if (rule == QuadRule::TanhSinh) return tanh_sinh(f, half_width);
    const int n = trap_points;
    const double h = 2.0 * half_width / (n - 1);
    cplx s = 0.5 * (f(-half_width) + f(half_width));
    for (int i = 1; i + 1 < n; ++i) s += f(-half_width + i * h);
    return s * h;
}

double overlap_half_width(const Wavefunction& bra, const Wavefunction& ket, double eps) {
    double peak = 0.0, cut = 60.0;
    std::vector<double> mags;
    for (double t = 0.0; t <= 60.0; t += 0.25) {
        double m;
        try {
            m = std::abs(std::conj(bra(t)) * ket(t)) + std::abs(std::conj(bra(-t)) * ket(-t));
        } catch (const OverflowError&) {
            break;
        }
        if (!std::isfinite(m)) break;
        mags.push_back(m);
        peak = std::max(peak, m);
    }
    if (mags.empty() || peak == 0.0) return 5.0;
    cut = 0.25 * (mags.size() - 1);
    for (std::size_t i = 0; i < mags.size(); ++i) {
        if (mags[i] >= eps * peak) cut = 0.25 * i + 0.5;
    }
    return std::min(cut, 60.0);
}

cplx inner_product(const Wavefunction& bra, const Wavefunction& ket, QuadRule rule) {
    const double L = overlap_half_width(bra, ket);
    return integrate([&](double x) { return std::conj(bra(x)) * ket(x); }, L, rule);
}

namespace {

cplx inner_biorthogonal_direct(const OneModeForm& form, int m, int n) {
    const Wavefunction bra =
        make_wavefunction(form, WaveSpec{Family::ExcitedBbar, m}, false);
    const Wavefunction ket = make_wavefunction(form, WaveSpec{Family::ExcitedB, n}, false);
    return inner_product(bra, ket);
}

} // namespace

cplx inner_biorthogonal(const OneModeForm& form, int m, int n, double tol) {
    const Region r = classify(form, tol).label;
    if (r == Region::I) return inner_biorthogonal_direct(form, m, n);
    if (r == Region::BorderI_II) {
        // The dual family degenerates to derivatives of a delta here; take the
        // limit of the pairing along B± (1 - eps), which stays inside region I.
        const double eps[3] = {0.02, 0.01, 0.005};
        cplx val[3];
        for (int i = 0; i < 3; ++i) {
            OneModeForm g{form.a_coeff, form.b_plus * (1.0 - eps[i]),
                          form.b_minus * (1.0 - eps[i])};
            val[i] = inner_biorthogonal_direct(g, m, n);
        }
        // Neville extrapolation to eps = 0.
        cplx p01 = (eps[0] * val[1] - eps[1] * val[0]) / (eps[0] - eps[1]);
        cplx p12 = (eps[1] * val[2] - eps[2] * val[1]) / (eps[1] - eps[2]);
        return (eps[0] * p12 - eps[2] * p01) / (eps[0] - eps[2]);
    }
    throw RegionMismatchError(
        "inner_biorthogonal: pairing is finite only in region I or on the I-II border");
}

ResidualReport schrodinger_residual(const Wavefunction& wf, double half_width, int points) {
    CoordinateForm cf = to_coordinate(wf.form());
    if (wf.adjoint()) {
        cf.a_tilde_plus = std::conj(cf.a_tilde_plus);
        cf.a_tilde_minus = std::conj(cf.a_tilde_minus);
        cf.b_tilde = std::conj(cf.b_tilde);
    }
    const cplx e = wf.energy();

    std::vector<std::array<cplx, 3>> vals(points);
    double max_psi = 0.0;
    const double h = 2.0 * half_width / (points - 1);
    for (int i = 0; i < points; ++i) {
        vals[i] = wf.eval3(-half_width + i * h);
        max_psi = std::max(max_psi, std::abs(vals[i][0]));
    }
    double worst = 0.0;
    for (int i = 0; i < points; ++i) {
        const double x = -half_width + i * h;
        const auto& [psi, dpsi, ddpsi] = vals[i];
        if (std::abs(psi) <= 1e-12 * max_psi) continue;
        const cplx lhs = -0.5 * cf.a_tilde_minus * ddpsi -
                         cplx(0.0, 1.0) * cf.b_tilde * (x * dpsi + 0.5 * psi) +
                         0.5 * cf.a_tilde_plus * x * x * psi;
        const double denom = std::max(std::abs(e * psi), 1e-300);
        worst = std::max(worst, std::abs(lhs - e * psi) / denom);
    }
    ResidualReport rep;
    rep.max_rel_residual = worst;
    rep.grid = QuadratureGrid{half_width, points, QuadRule::Trapezoid};
    rep.energy = e;
    rep.max_abs_psi = max_psi;
    return rep;
}

OverlapReport overlap_convergence(const OneModeForm& form, double tol) {
    const BogoliubovCoeffs bog = bogoliubov(form, tol);
    const GreekCoeffs g = greek_coeffs(bog);
    OverlapReport rep;
    rep.branch_ratio =
        std::abs((form.a_coeff - bog.lambda) / (form.a_coeff + bog.lambda));

    // conj(psi_0^b̄) psi_0^b = C exp(-q x²) with Re q > 0 in regions I and II.
    const cplx q = g.alpha / (2.0 * g.beta) + std::conj(g.alpha_bar) / (2.0 * std::conj(g.beta_bar));
    const cplx c = 1.0 / (std::sqrt(std::sqrt(kPi) * g.beta) *
                          std::conj(std::sqrt(std::sqrt(kPi) * g.beta_bar)));
    if (q.real() <= 0.0) {
        rep.overlap = cplx(std::numeric_limits<double>::quiet_NaN(), 0.0);
        rep.closed_form_error = std::numeric_limits<double>::infinity();
        return rep;
    }
    const double L = std::sqrt(42.0 / q.real());
    auto f = [&](double x) { return c * std::exp(-q * x * x); };
    rep.overlap = integrate(f, L);
    const cplx wide = integrate(f, 1.25 * L);
    rep.doubling_change = std::abs(wide - rep.overlap) / std::max(std::abs(wide), 1e-300);
    rep.closed_form_error = std::abs(rep.overlap - 1.0);
    return rep;
}

} // namespace bosonspec
