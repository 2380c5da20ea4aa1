/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "bosonspec/json_io.hpp"

#include <charconv>

namespace bosonspec {

std::string format_double(double x) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc()) return "nan";
    return std::string(buf, ptr);
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw std::invalid_argument("complex value must be a [re, im] pair");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

OneModeForm one_mode_from_json(const json& j) {
    if (!j.is_object() || !j.contains("A") || !j.contains("Bp") || !j.contains("Bm")) {
        throw std::invalid_argument("form must be an object with keys A, Bp, Bm");
    }
    return OneModeForm{complex_from_json(j.at("A")), complex_from_json(j.at("Bp")),
                       complex_from_json(j.at("Bm"))};
}

json one_mode_to_json(const OneModeForm& f) {
    return json{{"A", complex_to_json(f.a_coeff)},
                {"Bp", complex_to_json(f.b_plus)},
                {"Bm", complex_to_json(f.b_minus)}};
}

Eigen::MatrixXcd matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j[0].size());
    Eigen::MatrixXcd m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(j[r].size()) != cols) {
            throw std::invalid_argument("matrix rows have unequal lengths");
        }
        for (int c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
    }
    return m;
}

json matrix_to_json(const Eigen::MatrixXcd& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

MultiModeForm multimode_from_json(const json& j) {
    if (!j.is_object() || !j.contains("A") || !j.contains("Bp") || !j.contains("Bm")) {
        throw std::invalid_argument("multimode form must have keys A, Bp, Bm");
    }
    const Eigen::MatrixXcd a = matrix_from_json(j.at("A"));
    const Eigen::MatrixXcd bp = matrix_from_json(j.at("Bp"));
    const Eigen::MatrixXcd bm = matrix_from_json(j.at("Bm"));
    if (a.rows() != a.cols() || bp.rows() != bp.cols() || bm.rows() != bm.cols() ||
        a.rows() != bp.rows() || a.rows() != bm.rows()) {
        throw std::invalid_argument("multimode blocks must be square matrices of equal size");
    }
    return make_multimode(a, bp, bm);
}

json multimode_to_json(const MultiModeForm& f) {
    return json{{"A", matrix_to_json(f.a_matrix)},
                {"Bp", matrix_to_json(f.b_plus_matrix)},
                {"Bm", matrix_to_json(f.b_minus_matrix)}};
}

} // namespace bosonspec
