/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "bosonspec/wavefunctions.hpp"

#include <cmath>
#include <initializer_list>
#include <limits>

#include "bosonspec/special_functions.hpp"

namespace bosonspec {

GreekCoeffs greek_coeffs(const BogoliubovCoeffs& b) {
    GreekCoeffs g;
    g.alpha = b.u + b.v;
    g.beta = b.u - b.v;
    g.alpha_bar = b.u_bar() + b.v_bar();
    g.beta_bar = b.u_bar() - b.v_bar();
    if (g.beta == cplx(0.0, 0.0)) throw DegenerateError("greek_coeffs: beta = 0");
    if (g.beta_bar == cplx(0.0, 0.0)) throw DegenerateError("greek_coeffs: beta-bar = 0");
    g.gamma = std::sqrt(g.beta * std::conj(g.beta_bar));
    return g;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::VacuumB: return "vacuum_b";
        case Family::VacuumBbar: return "vacuum_bbar";
        case Family::ExcitedB: return "excited_b";
        case Family::ExcitedBbar: return "excited_bbar";
        case Family::ContinuousB: return "continuous_b";
        case Family::ContinuousBbarDag: return "continuous_bbar_dag";
        case Family::NegativeBand: return "negative_band";
        case Family::Border: return "border";
        case Family::Coherent: return "coherent";
    }
    return "?";
}

namespace {

// x^p for real x with the branch x < 0 -> e^{i pi p} |x|^p; integer p reduces
// to the natural power.  At x = 0: zero for Re p > 0, one for p = 0.
cplx pow_branch(double x, cplx p) {
    if (p == cplx(0.0, 0.0)) return {1.0, 0.0};
    if (x == 0.0) {
        if (p.real() > 0.0) return {0.0, 0.0};
        return {std::numeric_limits<double>::infinity(), 0.0};
    }
    if (x > 0.0) return std::exp(p * std::log(x));
    return std::exp(p * (std::log(-x) + cplx(0.0, kPi)));
}

// psi = C exp(sigma x²) G(x) assembled from kernel (G, G', G'').
std::array<cplx, 3> assemble(cplx c, cplx sigma, double x, const std::array<cplx, 3>& g) {
    const cplx e = c * std::exp(sigma * x * x);
    const cplx s2x = 2.0 * sigma * x;
    return {e * g[0],
            e * (s2x * g[0] + g[1]),
            e * ((2.0 * sigma + s2x * s2x) * g[0] + 2.0 * s2x * g[1] + g[2])};
}

// Kernel H_nu(s x); derivatives via H' = 2 nu H_{nu-1}.
std::array<cplx, 3> kernel_hermite(cplx nu, cplx s, double x) {
    const cplx z = s * static_cast<double>(x);
    std::array<cplx, 3> g{hermite_nu(nu, z), {0.0, 0.0}, {0.0, 0.0}};
    if (nu != cplx(0.0, 0.0)) {
        g[1] = 2.0 * nu * s * hermite_nu(nu - 1.0, z);
        if (nu != cplx(1.0, 0.0)) {
            g[2] = 4.0 * nu * (nu - 1.0) * s * s * hermite_nu(nu - 2.0, z);
        }
    }
    return g;
}

// Kernel H_nu(s x) + (-1)^n H_nu(-s x).
std::array<cplx, 3> kernel_hermite_pair(cplx nu, int n, cplx s, double x) {
    const double pn = (n % 2 == 0) ? 1.0 : -1.0;
    const cplx z = s * static_cast<double>(x);
    auto [h0p, h0m] = hermite_nu_pair(nu, z);
    std::array<cplx, 3> g{h0p + pn * h0m, {0.0, 0.0}, {0.0, 0.0}};
    if (nu != cplx(0.0, 0.0)) {
        auto [h1p, h1m] = hermite_nu_pair(nu - 1.0, z);
        g[1] = 2.0 * nu * s * (h1p - pn * h1m);
        if (nu != cplx(1.0, 0.0)) {
            auto [h2p, h2m] = hermite_nu_pair(nu - 2.0, z);
            g[2] = 4.0 * nu * (nu - 1.0) * s * s * (h2p + pn * h2m);
        }
    }
    return g;
}

// psi = C exp(sigma x²) x^p with the pow_branch convention.
std::array<cplx, 3> eval_power(cplx c, cplx sigma, cplx p, double x) {
    const cplx e = c * std::exp(sigma * x * x);
    const cplx p0 = pow_branch(x, p);
    const cplx p1 = p * pow_branch(x, p - 1.0);
    const cplx p2 = p * (p - 1.0) * pow_branch(x, p - 2.0);
    const cplx s2x = 2.0 * sigma * x;
    return {e * p0,
            e * (s2x * p0 + p1),
            e * ((2.0 * sigma + s2x * s2x) * p0 + 2.0 * s2x * p1 + p2)};
}

double log_factorial(int n) {
    double s = 0.0;
    for (int k = 2; k <= n; ++k) s += std::log(static_cast<double>(k));
    return s;
}

void check_region(Region r, std::initializer_list<Region> allowed, Family fam) {
    for (Region a : allowed) {
        if (r == a) return;
    }
    throw RegionMismatchError("family " + family_name(fam) + " is not valid in region " +
                              region_name(r));
}

} // namespace

Wavefunction make_wavefunction(const OneModeForm& form, const WaveSpec& spec,
                               bool enforce_region, double tol) {
    Wavefunction wf;
    wf.spec_ = spec;
    wf.form_ = form;

    const Region region = classify(form, tol).label;
    const double fscale = std::abs(form.a_coeff) + std::abs(form.b_plus) + std::abs(form.b_minus);

    if (spec.family == Family::Coherent) {
        if (enforce_region) check_region(region, {Region::NonDiagII}, spec.family);
        const cplx sp = std::sqrt(form.b_plus), sm = std::sqrt(form.b_minus);
        const double gap = std::abs(form.b_minus) - std::abs(form.b_plus);
        if (gap <= 0.0) {
            throw DegenerateError("coherent: requires |B-| > |B+| (annihilation-side curve)");
        }
        const cplx c = (sm + sp) / (sm - sp);
        const cplx x0 = std::sqrt(2.0) * spec.alpha_c * std::sqrt(gap) / (sm + sp);
        wf.energy_ = 0.5 * gap * spec.alpha_c * spec.alpha_c;
        wf.eval3_ = [c, x0](double x) -> std::array<cplx, 3> {
            const cplx d = x - x0;
            const cplx psi = std::exp(-0.5 * c * d * d);
            return {psi, -c * d * psi, (-c + c * c * d * d) * psi};
        };
        return wf;
    }

    if (spec.family == Family::Border) {
        const CoordinateForm cf = to_coordinate(form);
        if (std::abs(cf.a_tilde_minus) > tol * std::max(fscale, 1e-300)) {
            throw RegionMismatchError("border: requires A~- = 0 (B± real, B+ + B- = 2A)");
        }
        const cplx lam = form.b_minus - form.a_coeff;
        if (std::abs(lam) <= tol * std::max(fscale, 1e-300)) {
            throw NonDiagonalizableError("border: A = B- (lambda = 0)");
        }
        const cplx sigma = -form.a_coeff / (2.0 * lam);
        const cplx nu = spec.nu;
        wf.energy_ = lam * (nu + 0.5);
        wf.eval3_ = [sigma, nu](double x) { return eval_power(cplx(1.0), sigma, nu, x); };
        return wf;
    }

    const BogoliubovCoeffs bog = bogoliubov(form, tol);
    const GreekCoeffs g = greek_coeffs(bog);
    wf.coeffs_ = g;
    const cplx lam = bog.lambda;
    const cplx bbar_star = g.beta_bar_star();
    const cplx abar_star = g.alpha_bar_star();

    switch (spec.family) {
        case Family::VacuumB:
        case Family::ExcitedB: {
            if (enforce_region) {
                check_region(region, {Region::I, Region::II, Region::BorderI_II}, spec.family);
            }
            const int n = (spec.family == Family::VacuumB) ? 0 : spec.n;
            wf.energy_ = lam * (n + 0.5);
            const cplx norm = 1.0 / std::sqrt(std::sqrt(kPi) * g.beta);
            const cplx sigma = -g.alpha / (2.0 * g.beta);
            if (n > 0 && std::abs(bbar_star) <= 1e-9 * std::abs(abar_star)) {
                // border I-II limit: the 0·∞ product of prefactor and Hermite
                // collapses to a monomial, psi_n = (sqrt(2) x / beta)^n psi_0 / sqrt(n!)
                const cplx c = norm * std::exp(static_cast<double>(n) *
                                                   std::log(std::sqrt(2.0) / g.beta) -
                                               0.5 * log_factorial(n));
                const cplx p(static_cast<double>(n), 0.0);
                wf.eval3_ = [c, sigma, p](double x) { return eval_power(c, sigma, p, x); };
            } else {
                const cplx c =
                    norm * std::exp(0.5 * static_cast<double>(n) *
                                        std::log(bbar_star / (2.0 * g.beta)) -
                                    0.5 * log_factorial(n));
                const cplx s = 1.0 / g.gamma;
                const cplx nu(static_cast<double>(n), 0.0);
                wf.eval3_ = [c, sigma, nu, s](double x) {
                    return assemble(c, sigma, x, kernel_hermite(nu, s, x));
                };
            }
            break;
        }
        case Family::VacuumBbar:
        case Family::ExcitedBbar: {
            if (enforce_region) {
                check_region(region, {Region::I, Region::III, Region::BorderI_III}, spec.family);
            }
            const int m = (spec.family == Family::VacuumBbar) ? 0 : spec.n;
            wf.adjoint_ = true;
            wf.energy_ = std::conj(lam) * (m + 0.5);
            const cplx bbar = g.beta_bar;
            const cplx c = std::exp(0.5 * static_cast<double>(m) *
                                        std::log(std::conj(g.beta) / (2.0 * bbar)) -
                                    0.5 * log_factorial(m)) /
                           std::sqrt(std::sqrt(kPi) * bbar);
            const cplx sigma = -g.alpha_bar / (2.0 * bbar);
            const cplx s = 1.0 / std::conj(g.gamma);
            const cplx nu(static_cast<double>(m), 0.0);
            wf.eval3_ = [c, sigma, nu, s](double x) {
                return assemble(c, sigma, x, kernel_hermite(nu, s, x));
            };
            break;
        }
        case Family::NegativeBand: {
            if (enforce_region) check_region(region, {Region::II}, spec.family);
            const int n = spec.n;
            wf.energy_ = -lam * (n + 0.5);
            const cplx c = std::exp(0.5 * static_cast<double>(n) *
                                        std::log(g.beta / (2.0 * bbar_star)) -
                                    0.5 * log_factorial(n));
            const cplx sigma = abar_star / (2.0 * bbar_star);
            const cplx s = cplx(0.0, 1.0) / g.gamma;
            const cplx nu(static_cast<double>(n), 0.0);
            wf.eval3_ = [c, sigma, nu, s](double x) {
                return assemble(c, sigma, x, kernel_hermite(nu, s, x));
            };
            break;
        }
        case Family::ContinuousB:
        case Family::ContinuousBbarDag: {
            if (enforce_region) check_region(region, {Region::II}, spec.family);
            const CoordinateForm cf = to_coordinate(form);
            if (std::abs(cf.a_tilde_minus) <= tol * std::max(fscale, 1e-300)) {
                throw DegenerateError("continuous family: A~- = 0");
            }
            const cplx nu = spec.nu;
            const int n = static_cast<int>(std::floor(nu.real()));
            const bool bside = (spec.family == Family::ContinuousB);
            const cplx ratio = bside ? bbar_star / (2.0 * g.beta) : g.beta / (2.0 * bbar_star);
            const cplx c = xi(nu) * std::exp(0.5 * static_cast<double>(n) * std::log(ratio));
            const cplx ib = cplx(0.0, 1.0) * cf.b_tilde;
            const cplx sigma =
                bside ? -(ib + lam) / (2.0 * cf.a_tilde_minus)
                      : -(ib - lam) / (2.0 * cf.a_tilde_minus);
            const cplx s = (bside ? cplx(1.0) : cplx(0.0, 1.0)) / g.gamma;
            wf.energy_ = (bside ? lam : -lam) * (nu + 0.5);
            wf.eval3_ = [c, sigma, nu, n, s](double x) {
                return assemble(c, sigma, x, kernel_hermite_pair(nu, n, s, x));
            };
            break;
        }
        default:
            throw std::logic_error("make_wavefunction: unhandled family");
    }
    return wf;
}

SampledFunction ladder_apply(LadderOp op, const Wavefunction& wf,
                             const std::vector<double>& grid) {
    const std::size_t m = grid.size();
    if (m < 7) throw AccuracyError("ladder_apply: grid too coarse (need at least 7 points)");
    const double h = grid[1] - grid[0];
    for (std::size_t i = 1; i + 1 < m; ++i) {
        if (std::abs((grid[i + 1] - grid[i]) - h) > 1e-9 * std::abs(h)) {
            throw AccuracyError("ladder_apply: grid must be uniform");
        }
    }
    std::vector<cplx> psi(m);
    for (std::size_t i = 0; i < m; ++i) psi[i] = wf(grid[i]);

    const GreekCoeffs& g = wf.coeffs();
    const cplx cx = (op == LadderOp::B) ? g.alpha : g.alpha_bar_star();
    const cplx cd = (op == LadderOp::B) ? g.beta : -g.beta_bar_star();
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    SampledFunction out;
    double worst = 0.0, scale = 0.0;
    for (std::size_t i = 2; i + 2 < m; ++i) {
        const cplx d5 = (psi[i - 2] - 8.0 * psi[i - 1] + 8.0 * psi[i + 1] - psi[i + 2]) /
                        (12.0 * h);
        const cplx d3 = (psi[i + 1] - psi[i - 1]) / (2.0 * h);
        worst = std::max(worst, std::abs(d5 - d3));
        scale = std::max(scale, std::abs(d5));
        out.x.push_back(grid[i]);
        out.values.push_back(inv_sqrt2 * (cx * grid[i] * psi[i] + cd * d5));
    }
    if (worst > 1e-4 * std::max(scale, 1e-300)) {
        throw AccuracyError("ladder_apply: grid too coarse (derivative accuracy check fails)");
    }
    return out;
}

} // namespace bosonspec
