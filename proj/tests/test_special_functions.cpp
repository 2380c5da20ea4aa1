/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include <doctest.h>

#include <cmath>
#include <random>

#include "bosonspec/special_functions.hpp"

using namespace bosonspec;

namespace {

// Reference values computed with 30+ digit arbitrary-precision arithmetic.
struct HermiteRef {
    cplx nu, z, value;
};

constexpr double kSqrtPi = 1.7724538509055160273;

cplx hermite_exact_poly(int n, cplx z) {
    cplx hm(1.0, 0.0), h = 2.0 * z;
    if (n == 0) return hm;
    for (int k = 1; k < n; ++k) {
        const cplx next = 2.0 * z * h - 2.0 * static_cast<double>(k) * hm;
        hm = h;
        h = next;
    }
    return h;
}

} // namespace

TEST_CASE("gamma: reference values, reflection and poles") {
    CHECK(std::abs(gamma_c(cplx(0.5, 0)) - kSqrtPi) < 1e-14);
    CHECK(std::abs(gamma_c(cplx(5, 0)) - 24.0) < 1e-12);
    const struct {
        cplx z, value;
    } refs[] = {
        {{0.5, 0.5}, {0.81816399954174739, -0.76331382871398262}},
        {{3.2, -1.5}, {0.0057860391824694931, -1.6346266024199491}},
        {{-2.5, 0.0}, {-0.94530872048294188, 0.0}},
    };
    for (const auto& r : refs) {
        CHECK(std::abs(gamma_c(r.z) - r.value) < 1e-13 * std::abs(r.value));
    }
    CHECK_THROWS_AS(gamma_c(cplx(0, 0)), PoleError);
    CHECK_THROWS_AS(gamma_c(cplx(-3, 0)), PoleError);
    CHECK(rgamma_c(cplx(-3, 0)) == cplx(0.0, 0.0));
    CHECK(std::abs(rgamma_c(cplx(4, 0)) - 1.0 / 6.0) < 1e-14);
    // functional equation Gamma(z+1) = z Gamma(z)
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> d(-4.0, 4.0);
    for (int i = 0; i < 200; ++i) {
        const cplx z(d(rng), d(rng));
        if (std::abs(z.imag()) < 0.1) continue;
        CHECK(std::abs(gamma_c(z + 1.0) - z * gamma_c(z)) <
              1e-11 * std::abs(gamma_c(z + 1.0)));
    }
}

TEST_CASE("hermite: integer orders equal the polynomials") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> d(-5.0, 5.0);
    for (int n = 0; n <= 20; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            const cplx z(d(rng), d(rng) / 2.0);
            const cplx exact = hermite_exact_poly(n, z);
            const cplx got = hermite_nu(cplx(n, 0), z);
            CHECK(std::abs(got - exact) <= 1e-12 * std::max(1.0, std::abs(exact)));
        }
    }
    CHECK(std::abs(hermite_nu(cplx(3, 0), cplx(1.5, 0)) - 9.0) < 1e-12);  // 8z³-12z at 1.5
}

TEST_CASE("hermite: arbitrary-precision reference values") {
    const HermiteRef refs[] = {
        // series regime
        {{0.3, 0.2}, {1.5, 0.0}, {1.3855634534592935, 0.32103001628720113}},
        {{0.3, 0.2}, {-2.1, 0.7}, {5.5990193750933717, 8.5721772804144628}},
        {{-1.7, 0.4}, {0.9, -1.3}, {-0.029955520972990251, 0.16952988431772354}},
        {{2.5, 0.0}, {3.0, 0.0}, {78.965154997089419, 0.0}},
        {{-0.5, 0.0}, {1.0, 0.0}, {0.63164289956349917, 0.0}},
        {{1.2, -0.8}, {-0.4, 2.2}, {15.558955737227955, 17.742453698557501}},
        {{4.3, 1.1}, {2.2, -0.6}, {760.21896475672062, -232.9699392432666}},
        // integral / recurrence regime
        {{0.3, 0.2}, {5.5, 0.0}, {1.8245904955848456, 0.95044437523876907}},
        {{0.3, 0.2}, {-6.0, 0.0}, {-223062926834262.82, 192255298283.21027}},
        {{-2.3, 0.0}, {8.0, 0.0}, {0.0016520018149653713, 0.0}},
        {{1.7, 0.9}, {-4.5, 3.0}, {-58.602955849925876, -2869.0952967900198}},
        {{-0.8, -0.6}, {7.0, -2.0}, {0.01753946267864456, -0.097680959104457205}},
        {{3.4, 0.0}, {6.5, 0.0}, {5833.7953892104348, 0.0}},
    };
    for (const auto& r : refs) {
        const cplx got = hermite_nu(r.nu, r.z);
        CHECK(std::abs(got - r.value) <= 1e-11 * std::abs(r.value));
    }
}

TEST_CASE("hermite: recurrence and derivative identities") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> dz(-3.5, 3.5), dn(-2.5, 2.5);
    for (int i = 0; i < 150; ++i) {
        const cplx nu(dn(rng), dn(rng));
        const cplx z(dz(rng), dz(rng) / 2.0);
        const cplx h0 = hermite_nu(nu, z);
        const cplx h1 = hermite_nu(nu + 1.0, z);
        const cplx hm = hermite_nu(nu - 1.0, z);
        const double scale = std::max({std::abs(h0), std::abs(h1), std::abs(hm), 1.0});
        // H_{nu+1} = 2z H_nu - 2nu H_{nu-1}
        CHECK(std::abs(h1 - 2.0 * z * h0 + 2.0 * nu * hm) <= 1e-10 * scale);
        // H_nu' = 2 nu H_{nu-1} (central finite-difference cross-check)
        const double eps = 1e-5;
        const cplx fd =
            (hermite_nu(nu, z + eps) - hermite_nu(nu, z - eps)) / (2.0 * eps);
        CHECK(std::abs(fd - 2.0 * nu * hm) <= 5e-7 * std::max(std::abs(fd), 1.0));
    }
}

TEST_CASE("hermite: ODE residual with analytic derivatives") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> dz(-3.0, 3.0), dn(-2.0, 2.0);
    for (int i = 0; i < 100; ++i) {
        const cplx nu(dn(rng), dn(rng));
        const cplx z(dz(rng), dz(rng) / 2.0);
        const cplx h0 = hermite_nu(nu, z);
        const cplx d1 = 2.0 * nu * hermite_nu(nu - 1.0, z);
        const cplx d2 = 4.0 * nu * (nu - 1.0) * hermite_nu(nu - 2.0, z);
        const double scale =
            std::max({std::abs(d2), std::abs(2.0 * z * d1), std::abs(2.0 * nu * h0), 1.0});
        CHECK(std::abs(d2 - 2.0 * z * d1 + 2.0 * nu * h0) <= 1e-9 * scale);
    }
}

TEST_CASE("hermite: connection formula in its validity regime") {
    // H_nu(z) = 2^nu Gamma(nu+1)/sqrt(pi) e^{z²}
    //           [e^{i pi nu/2} H_{-nu-1}(iz) + e^{-i pi nu/2} H_{-nu-1}(-iz)]
    std::mt19937 rng(19);
    std::uniform_real_distribution<double> dz(0.2, 2.5), dn(-1.5, 1.5);
    int checked = 0;
    for (int i = 0; i < 300 && checked < 100; ++i) {
        const cplx nu(dn(rng), dn(rng));
        if (std::abs(nu.real() - std::round(nu.real())) < 0.05 && std::abs(nu.imag()) < 0.05) {
            continue;  // Gamma pole / degenerate cases
        }
        const cplx z(dz(rng), 0.0);
        ++checked;
        const cplx lhs = hermite_nu(nu, z);
        const cplx iz = cplx(0.0, 1.0) * z;
        const cplx pref = std::exp(nu * std::log(2.0)) * gamma_c(nu + 1.0) / kSqrtPi *
                          std::exp(z * z);
        const cplx rhs = pref * (std::exp(cplx(0.0, kPi / 2.0) * nu) * hermite_nu(-nu - 1.0, iz) +
                                 std::exp(cplx(0.0, -kPi / 2.0) * nu) *
                                     hermite_nu(-nu - 1.0, -iz));
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)));
    }
    CHECK(checked == 100);
}

TEST_CASE("hermite: asymptotic (2z)^nu for |arg z| < 3pi/4") {
    const cplx nu(0.7, 0.3);
    const cplx z(18.0, 4.0);
    const cplx expect = std::exp(nu * std::log(2.0 * z));
    const cplx got = hermite_nu(nu, z);
    CHECK(std::abs(got / expect - 1.0) < 5e-3);  // O(|z|^{-2}) correction
}

TEST_CASE("hermite: joint pair evaluation is consistent") {
    const cplx nu(0.4, -0.9);
    for (double x : {-2.0, 0.3, 1.7}) {
        const auto [hp, hm] = hermite_nu_pair(nu, cplx(x, 0.4));
        CHECK(std::abs(hp - hermite_nu(nu, cplx(x, 0.4))) < 1e-12 * std::max(1.0, std::abs(hp)));
        CHECK(std::abs(hm - hermite_nu(nu, cplx(-x, -0.4))) <
              1e-12 * std::max(1.0, std::abs(hm)));
    }
}

TEST_CASE("scaled evaluation stays finite where the plain value overflows") {
    // e^{z²}-sized growth on the negative axis
    const ScaledC s = hermite_nu_scaled(cplx(0.3, 0.2), cplx(-30.0, 0.0));
    CHECK(std::isfinite(std::abs(s.mantissa)));
    CHECK(s.exponent > 700.0);  // ~ e^{900}
    CHECK_THROWS_AS((void)s.value(), OverflowError);
    const cplx lg = s.log();
    CHECK(lg.real() > 700.0);
}

TEST_CASE("xi normalization: factorial branch and gamma branch") {
    CHECK(std::abs(xi(cplx(-1, 0)) - 1.0) < 1e-14);                  // sqrt(0!)
    CHECK(std::abs(xi(cplx(-4, 0)) - std::sqrt(6.0)) < 1e-13);       // sqrt(3!)
    CHECK(std::abs(xi(cplx(3, 0)) - 1.0 / std::sqrt(6.0)) < 1e-13);  // 1/sqrt(Gamma(4))
    const cplx nu(0.3, 0.2);
    CHECK(std::abs(xi(nu) - 1.0 / std::sqrt(gamma_c(nu + 1.0))) < 1e-13);
}
