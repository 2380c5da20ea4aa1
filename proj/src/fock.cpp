/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "bosonspec/fock.hpp"

#include <algorithm>
#include <cmath>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace bosonspec {

Eigen::MatrixXcd fock_matrix(const OneModeForm& form, int cutoff) {
    const int n = cutoff + 1;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        h(k, k) = form.a_coeff * (k + 0.5);
        if (k + 2 < n) {
            const double s = std::sqrt(static_cast<double>(k + 1) * (k + 2));
            h(k + 2, k) = 0.5 * form.b_plus * s;
            h(k, k + 2) = 0.5 * form.b_minus * s;
        }
    }
    return h;
}

Eigen::MatrixXcd fock_matrix_two_mode(const MultiModeForm& form, int cutoff) {
    const int c = cutoff + 1;
    const int dim = c * c;
    const auto& a = form.a_matrix;
    const auto& bp = form.b_plus_matrix;
    const auto& bm = form.b_minus_matrix;
    const cplx half_tr = 0.5 * (a(0, 0) + a(1, 1));
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    auto idx = [c](int n1, int n2) { return n1 * c + n2; };
    for (int n1 = 0; n1 < c; ++n1) {
        for (int n2 = 0; n2 < c; ++n2) {
            const int col = idx(n1, n2);
            h(col, col) += a(0, 0) * static_cast<double>(n1) +
                           a(1, 1) * static_cast<double>(n2) + half_tr;
            // a†_1 a_2 and a†_2 a_1
            if (n2 > 0 && n1 + 1 < c) {
                h(idx(n1 + 1, n2 - 1), col) += a(0, 1) * std::sqrt((n1 + 1.0) * n2);
            }
            if (n1 > 0 && n2 + 1 < c) {
                h(idx(n1 - 1, n2 + 1), col) += a(1, 0) * std::sqrt((n2 + 1.0) * n1);
            }
            // (B+/2) a†a†: same-mode and cross terms (B symmetric)
            if (n1 + 2 < c) {
                h(idx(n1 + 2, n2), col) += 0.5 * bp(0, 0) * std::sqrt((n1 + 1.0) * (n1 + 2.0));
            }
            if (n2 + 2 < c) {
                h(idx(n1, n2 + 2), col) += 0.5 * bp(1, 1) * std::sqrt((n2 + 1.0) * (n2 + 2.0));
            }
            if (n1 + 1 < c && n2 + 1 < c) {
                h(idx(n1 + 1, n2 + 1), col) += bp(0, 1) * std::sqrt((n1 + 1.0) * (n2 + 1.0));
            }
            // (B-/2) aa
            if (n1 >= 2) {
                h(idx(n1 - 2, n2), col) += 0.5 * bm(0, 0) * std::sqrt(n1 * (n1 - 1.0));
            }
            if (n2 >= 2) {
                h(idx(n1, n2 - 2), col) += 0.5 * bm(1, 1) * std::sqrt(n2 * (n2 - 1.0));
            }
            if (n1 >= 1 && n2 >= 1) {
                h(idx(n1 - 1, n2 - 1), col) += bm(0, 1) * std::sqrt(static_cast<double>(n1) * n2);
            }
        }
    }
    return h;
}

std::vector<cplx> dense_eigenvalues(const Eigen::MatrixXcd& m) {
    const lapack_int n = static_cast<lapack_int>(m.rows());
    Eigen::MatrixXcd a = m;  // zgeev destroys its input
    std::vector<cplx> w(n);
    const lapack_int info =
        LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n, a.data(), n, w.data(), nullptr, 1,
                      nullptr, 1);
    if (info != 0) {
        throw AccuracyError("dense_eigenvalues: zgeev failed to converge (info=" +
                            std::to_string(info) + ")");
    }
    std::sort(w.begin(), w.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return w;
}

std::vector<cplx> fock_eigenvalues(const OneModeForm& form, int cutoff) {
    return dense_eigenvalues(fock_matrix(form, cutoff));
}

VacuumSeriesReport vacuum_series(VacuumKind which, const BogoliubovCoeffs& c, int n_max,
                                 double tol) {
    cplx z;
    switch (which) {
        case VacuumKind::B:
            if (c.u == cplx(0.0, 0.0)) throw DegenerateError("vacuum_series: u = 0");
            z = -c.v / c.u;
            break;
        case VacuumKind::Bbar:
            if (c.u_bar() == cplx(0.0, 0.0)) throw DegenerateError("vacuum_series: ū = 0");
            z = -c.v_bar() / c.u_bar();
            break;
        case VacuumKind::BbarDagger:
            if (c.vbar_star == cplx(0.0, 0.0)) throw DegenerateError("vacuum_series: v̄* = 0");
            z = -c.ubar_star / c.vbar_star;
            break;
    }
    VacuumSeriesReport rep;
    // c_n = (z/2)^n sqrt((2n)!)/n!, accumulated in log space.
    double log_mag = 0.0;
    cplx phase(1.0, 0.0);
    for (int n = 0; n <= n_max; ++n) {
        if (std::abs(log_mag) < 700.0) {
            rep.coefficients.push_back(phase * std::exp(log_mag));
        } else {
            break;
        }
        const double az = std::abs(z);
        if (az == 0.0) break;  // only c_0 is nonzero
        const double step = std::sqrt((2.0 * n + 1.0) * (2.0 * n + 2.0)) / (n + 1.0);
        log_mag += std::log(az / 2.0 * step);
        phase *= z / az;
    }
    const double az = std::abs(z);
    rep.ratio_trend = az;
    if (std::abs(az - 1.0) <= tol) {
        rep.convergent = false;
        rep.conditional = std::abs(z - 1.0) > tol;
    } else {
        rep.convergent = az < 1.0;
    }
    return rep;
}

SpectrumComparison compare_spectrum(const OneModeForm& form, int cutoff, int k,
                                    double stability_tol) {
    const BogoliubovCoeffs c = bogoliubov(form);
    SpectrumComparison rep;
    for (int n = 0; n < k; ++n) rep.analytic.push_back(c.lambda * (n + 0.5));

    const std::vector<cplx> ev1 = fock_eigenvalues(form, cutoff);
    const std::vector<cplx> ev2 = fock_eigenvalues(form, 2 * cutoff);
    auto nearest = [](const std::vector<cplx>& ev, cplx target) {
        cplx best = ev.front();
        double d = std::abs(best - target);
        for (cplx e : ev) {
            if (std::abs(e - target) < d) {
                d = std::abs(e - target);
                best = e;
            }
        }
        return best;
    };
    for (cplx t : rep.analytic) {
        const cplx m1 = nearest(ev1, t);
        const cplx m2 = nearest(ev2, t);
        rep.matched.push_back(m1);
        rep.max_abs_diff = std::max(rep.max_abs_diff, std::abs(m1 - t));
        rep.doubling_shift = std::max(rep.doubling_shift, std::abs(m1 - m2));
    }
    rep.stable = rep.doubling_shift <= stability_tol;
    return rep;
}

} // namespace bosonspec
