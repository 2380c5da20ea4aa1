/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <string>

#include "bosonspec/json_io.hpp"
#include "test_helpers.hpp"

using namespace bosonspec;
using bosonspec::testing::random_cplx;

TEST_CASE("format_double: shortest round-trip representation") {
    const double values[] = {0.1, 1.0 / 3.0, 1e-300, -2.5, 0.0, 123456789.123456789,
                             std::sqrt(2.0)};
    for (double v : values) {
        const std::string s = format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(2.0) == "2");
}

TEST_CASE("complex values as [re, im] pairs") {
    std::mt19937 rng(3);
    for (int i = 0; i < 100; ++i) {
        const cplx z = random_cplx(rng, 5.0);
        const json j = complex_to_json(z);
        REQUIRE(j.is_array());
        REQUIRE(j.size() == 2);
        CHECK(complex_from_json(j) == z);
    }
    CHECK(complex_from_json(json::parse("[1.5, -0.25]")) == cplx(1.5, -0.25));
}

TEST_CASE("one-mode form round trip and schema") {
    const OneModeForm f{cplx(1.25, -0.5), cplx(0.3, 0.7), cplx(-0.1, 0.0)};
    const json j = one_mode_to_json(f);
    CHECK(j.contains("A"));
    CHECK(j.contains("Bp"));
    CHECK(j.contains("Bm"));
    const OneModeForm g = one_mode_from_json(j);
    CHECK(g.a_coeff == f.a_coeff);
    CHECK(g.b_plus == f.b_plus);
    CHECK(g.b_minus == f.b_minus);
    // parse from text
    const OneModeForm h =
        one_mode_from_json(json::parse(R"({"A":[1,0],"Bp":[0.5,0],"Bm":[0.3,0]})"));
    CHECK(h.a_coeff == cplx(1, 0));
}

TEST_CASE("matrix round trip") {
    std::mt19937 rng(5);
    Eigen::MatrixXcd m(3, 2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) m(i, j) = random_cplx(rng);
    const Eigen::MatrixXcd back = matrix_from_json(matrix_to_json(m));
    REQUIRE(back.rows() == 3);
    REQUIRE(back.cols() == 2);
    CHECK((back - m).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("multimode round trip and validation") {
    std::mt19937 rng(9);
    Eigen::MatrixXcd a(2, 2), bp(2, 2), bm(2, 2);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            a(i, j) = random_cplx(rng);
            bp(i, j) = random_cplx(rng);
            bm(i, j) = random_cplx(rng);
        }
    }
    const MultiModeForm f = make_multimode(a, bp, bm);
    const MultiModeForm g = multimode_from_json(multimode_to_json(f));
    CHECK((g.a_matrix - f.a_matrix).cwiseAbs().maxCoeff() == 0.0);
    CHECK((g.b_plus_matrix - f.b_plus_matrix).cwiseAbs().maxCoeff() == 0.0);
    CHECK((g.b_minus_matrix - f.b_minus_matrix).cwiseAbs().maxCoeff() == 0.0);

    // mismatched block sizes are rejected
    json bad = multimode_to_json(f);
    bad["Bp"] = matrix_to_json(Eigen::MatrixXcd::Zero(3, 3));
    CHECK_THROWS(multimode_from_json(bad));
    // non-square blocks are rejected
    json bad2 = multimode_to_json(f);
    bad2["A"] = matrix_to_json(Eigen::MatrixXcd::Zero(2, 3));
    CHECK_THROWS(multimode_from_json(bad2));
}
