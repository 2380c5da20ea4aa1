/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "bosonspec/special_functions.hpp"

#include <cmath>
#include <limits>

namespace bosonspec {

ScaledC ScaledC::from(cplx z) { return ScaledC{z, 0.0}.normalized(); }

ScaledC ScaledC::normalized() const {
    double m = std::abs(mantissa);
    if (m == 0.0 || !std::isfinite(m)) return *this;
    if (m > 1e100 || m < 1e-100) {
        double l = std::log(m);
        return ScaledC{mantissa / std::exp(l), exponent + l};
    }
    return *this;
}

cplx ScaledC::value() const {
    if (is_zero()) return {0.0, 0.0};
    double m = std::log(std::abs(mantissa)) + exponent;
    if (m > 709.0) throw OverflowError("scaled value exceeds double range");
    if (exponent > 700.0 || exponent < -700.0) {
        // exp(exponent) alone would overflow/underflow even though the
        // product fits; rebuild from the combined magnitude.
        return std::polar(std::exp(m), std::arg(mantissa));
    }
    return mantissa * std::exp(exponent);
}

cplx ScaledC::log() const {
    if (is_zero()) return {-std::numeric_limits<double>::infinity(), 0.0};
    return std::log(mantissa) + exponent;
}

namespace {

// Lanczos, g = 7, n = 9.
constexpr double kLanczos[9] = {
    0.99999999999980993,    676.5203681218851,      -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6,  1.5056327351493116e-7,
};

bool near_nonpositive_int(cplx z, long& n_out) {
    double r = std::round(z.real());
    if (r > 0.5) return false;
    if (std::abs(z.real() - r) <= 1e-12 * std::max(1.0, std::abs(r)) &&
        std::abs(z.imag()) <= 1e-12) {
        n_out = static_cast<long>(r);
        return true;
    }
    return false;
}

cplx gamma_positive_half(cplx z) {
    // Requires Re z >= 0.5.
    z -= 1.0;
    cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    cplx t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

} // namespace

cplx gamma_c(cplx z) {
    long n;
    if (near_nonpositive_int(z, n)) {
        throw PoleError("gamma_c: pole at non-positive integer");
    }
    if (z.real() < 0.5) {
        // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
        return kPi / (std::sin(kPi * z) * gamma_positive_half(1.0 - z));
    }
    return gamma_positive_half(z);
}

cplx lgamma_c(cplx z) {
    long n;
    if (near_nonpositive_int(z, n)) {
        throw PoleError("lgamma_c: pole at non-positive integer");
    }
    if (z.real() < 0.5) {
        return std::log(kPi) - std::log(std::sin(kPi * z)) - lgamma_c(1.0 - z);
    }
    cplx zm = z - 1.0;
    cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (zm + static_cast<double>(i));
    cplx t = zm + 7.5;
    return 0.5 * std::log(2.0 * kPi) + (zm + 0.5) * std::log(t) - t + std::log(x);
}

cplx rgamma_c(cplx z) {
    long n;
    if (near_nonpositive_int(z, n)) return {0.0, 0.0};
    return 1.0 / gamma_c(z);
}

namespace {

constexpr int kSeriesCap = 5000;

// Kummer's M(a, b, w), transformed to a non-negative real-part argument
// when Re w < 0 so the raw sum does not cancel catastrophically.
cplx kummer_m(cplx a, cplx b, cplx w) {
    cplx pre(1.0, 0.0);
    if (w.real() < 0.0) {
        pre = std::exp(w);
        a = b - a;
        w = -w;
    }
    cplx sum(1.0, 0.0), term(1.0, 0.0);
    int below = 0;
    for (int k = 0; k < kSeriesCap; ++k) {
        term *= (a + static_cast<double>(k)) / (b + static_cast<double>(k)) * w /
                static_cast<double>(k + 1);
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum)) {
            if (++below >= 3) break;
        } else {
            below = 0;
        }
    }
    return pre * sum;
}

bool nonneg_int_order(cplx nu, int& n_out) {
    double r = std::round(nu.real());
    if (r < -0.5) return false;
    if (std::abs(nu.real() - r) <= 1e-12 * std::max(1.0, std::abs(r)) &&
        std::abs(nu.imag()) <= 1e-12) {
        n_out = static_cast<int>(r);
        return true;
    }
    return false;
}

cplx hermite_poly(int n, cplx z) {
    if (n == 0) return {1.0, 0.0};
    cplx hm(1.0, 0.0), h = 2.0 * z;
    for (int k = 1; k < n; ++k) {
        cplx next = 2.0 * z * h - 2.0 * static_cast<double>(k) * hm;
        hm = h;
        h = next;
    }
    return h;
}

// Series path applicability: the worst intermediate magnitude relative to the
// result is about exp(max(Re w, 0) + |w| - |Re w|) with w = z².
bool series_ok(cplx z) {
    cplx w = z * z;
    double loss = std::max(w.real(), 0.0) + std::abs(w) - std::abs(w.real());
    return loss <= 9.0 && std::abs(w) <= 600.0;
}

std::pair<cplx, cplx> hermite_series_pair(cplx nu, cplx z) {
    const cplx w = z * z;
    const cplx even = kummer_m(-nu / 2.0, cplx(0.5), w) * rgamma_c((1.0 - nu) / 2.0);
    const cplx odd = 2.0 * z * kummer_m((1.0 - nu) / 2.0, cplx(1.5), w) * rgamma_c(-nu / 2.0);
    const cplx pre = std::exp(nu * std::log(2.0)) * std::sqrt(kPi);
    return {pre * (even - odd), pre * (even + odd)};
}

// Double-exponential quadrature of integral_0^inf f(t) dt with f decaying
// like a Gaussian and at most an integrable singularity at t = 0.
template <typename F>
cplx de_quadrature_halfline(F&& f) {
    auto sum_level = [&](double h) {
        cplx s(0.0, 0.0);
        double peak = 0.0;
        // positive and negative k until terms are negligible
        for (int dir = 0; dir < 2; ++dir) {
            int misses = 0;
            for (int k = (dir == 0 ? 0 : -1); std::abs(k) < 200000; k += (dir == 0 ? 1 : -1)) {
                double u = k * h;
                double sh = kPi / 2.0 * std::sinh(u);
                if (sh > 300.0 || sh < -700.0) break;
                double t = std::exp(sh);
                double jac = t * kPi / 2.0 * std::cosh(u);
                cplx term = f(t) * jac;
                double m = std::abs(term);
                if (!std::isfinite(m)) throw OverflowError("de_quadrature: integrand overflow");
                s += term;
                peak = std::max(peak, m);
                // only trust decay once something nonzero has been seen; the
                // integrand may underflow long before its interior peak
                if (peak > 0.0 && m < 1e-18 * peak) {
                    if (++misses >= 8) break;
                } else {
                    misses = 0;
                }
            }
        }
        return s * h;
    };
    cplx prev = sum_level(0.5);
    for (double h = 0.25; h >= 2e-4; h /= 2.0) {
        cplx cur = sum_level(h);
        if (std::abs(cur - prev) <= 1e-15 * std::abs(cur) + 1e-300) return cur;
        prev = cur;
    }
    return prev;
}

// H_nu(z) for Re nu < 0 through
//   H_nu(z) = 1/Gamma(-nu) * integral_0^inf exp(-t² - 2zt) t^{-nu-1} dt.
// For Re z < 0 the real-axis integrand oscillates with amplitude exp(Re z²)
// above the result; the contour is deformed through the saddle t0 = -z
// (ray 0 -> t0, then horizontal t0 -> infinity), which removes the
// oscillating Gaussian tail.  The wedge between the contours lies in
// Re t > 0, away from the branch cut of t^{-nu-1}.
ScaledC hermite_integral(cplx nu, cplx z) {
    double scale = 0.0;
    cplx integral;
    if (z.real() >= 0.0) {
        // (0, 1]: t = e^{-v} turns t^{-nu-1} dt into e^{nu v} dv, so the
        // endpoint singularity never meets the quadrature's underflow floor
        // even when Re nu -> 0^-
        const cplx p1 = de_quadrature_halfline([&](double v) {
            const double t = std::exp(-v);
            const cplx ex = -t * t - 2.0 * z * t + nu * v;
            return (ex.real() < -746.0) ? cplx(0.0, 0.0) : std::exp(ex);
        });
        // [1, inf): plain Gaussian decay, no singularity
        const cplx p2 = de_quadrature_halfline([&](double s) {
            const double t = 1.0 + s;
            const cplx ex = -t * t - 2.0 * z * t + (-nu - 1.0) * std::log(t);
            return (ex.real() < -746.0) ? cplx(0.0, 0.0) : std::exp(ex);
        });
        integral = p1 + p2;
    } else {
        const cplx t0 = -z;  // saddle, Re t0 > 0
        const cplx z2 = z * z;
        scale = std::max(z2.real(), 0.0);
        const cplx log_t0 = std::log(t0);
        // leg 1: t = sigma t0 with sigma = e^{-w}, w in (0, inf); the
        // substituted integrand is exp(z² sigma(2-sigma) + nu w - nu log t0)
        const cplx leg1 = de_quadrature_halfline([&](double w) {
            const double sigma = std::exp(-w);
            const cplx ex =
                z2 * (sigma * (2.0 - sigma)) - scale + nu * w - nu * log_t0;
            return (ex.real() < -746.0) ? cplx(0.0, 0.0) : std::exp(ex);
        });
        // leg 2: t = t0 + s, s in (0, inf): pure Gaussian decay
        const cplx leg2 = de_quadrature_halfline([&](double s) {
            const cplx ex = z2 - scale - s * s + (-nu - 1.0) * std::log(t0 + s);
            return (ex.real() < -746.0) ? cplx(0.0, 0.0) : std::exp(ex);
        });
        integral = leg1 + leg2;
    }
    const cplx lg = lgamma_c(-nu);
    ScaledC out{integral * std::exp(cplx(0.0, -lg.imag())), scale - lg.real()};
    return out.normalized();
}

ScaledC hermite_scaled_impl(cplx nu, cplx z) {
    int n;
    if (nonneg_int_order(nu, n)) return ScaledC::from(hermite_poly(n, z));
    if (series_ok(z)) return ScaledC::from(hermite_series_pair(nu, z).first);
    if (nu.real() < 0.0) return hermite_integral(nu, z);
    // Seed below the axis and recur upward: H_{m+1} = 2z H_m - 2m H_{m-1};
    // the shallowest seed keeps the amplification of seed error smallest when
    // |H| decreases with the order.
    const int steps = static_cast<int>(std::floor(nu.real())) + 1;
    cplx base = nu - static_cast<double>(steps);  // Re in [-1, 0)
    ScaledC hm = hermite_integral(base - 1.0, z);
    ScaledC h = hermite_integral(base, z);
    for (int k = 0; k < steps; ++k) {
        cplx mu = base + static_cast<double>(k);
        // align exponents
        double e = std::max(h.exponent, hm.exponent);
        cplx hv = h.mantissa * std::exp(h.exponent - e);
        cplx hmv = hm.mantissa * std::exp(hm.exponent - e);
        ScaledC next = ScaledC{2.0 * z * hv - 2.0 * mu * hmv, e}.normalized();
        hm = ScaledC{hv, e};
        h = next;
    }
    return h.normalized();
}

} // namespace

ScaledC hermite_nu_scaled(cplx nu, cplx z) { return hermite_scaled_impl(nu, z); }

cplx hermite_nu(cplx nu, cplx z) { return hermite_scaled_impl(nu, z).value(); }

cplx hermite_nu_log(cplx nu, cplx z) { return hermite_scaled_impl(nu, z).log(); }

std::pair<cplx, cplx> hermite_nu_pair(cplx nu, cplx z) {
    int n;
    if (nonneg_int_order(nu, n)) {
        cplx h = hermite_poly(n, z);
        cplx sign = (n % 2 == 0) ? cplx(1.0) : cplx(-1.0);
        return {h, sign * h};
    }
    if (series_ok(z)) return hermite_series_pair(nu, z);
    return {hermite_nu(nu, z), hermite_nu(nu, -z)};
}

cplx xi(cplx nu) {
    double r = std::round(nu.real());
    if (r <= -0.5 && std::abs(nu.real() - r) <= 1e-12 * std::max(1.0, std::abs(r)) &&
        std::abs(nu.imag()) <= 1e-12) {
        double f = 1.0;
        for (long k = 2; k < static_cast<long>(-r); ++k) f *= static_cast<double>(k);
        return std::sqrt(f);  // sqrt((|nu|-1)!)
    }
    return 1.0 / std::sqrt(gamma_c(nu + 1.0));
}

} // namespace bosonspec
