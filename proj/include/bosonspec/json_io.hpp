/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <json.hpp>
#include <string>

#include "bosonspec/forms.hpp"
#include "bosonspec/types.hpp"

namespace bosonspec {

using nlohmann::json;

/// Shortest decimal that round-trips the double exactly.
std::string format_double(double x);

json complex_to_json(cplx z);
cplx complex_from_json(const json& j);

/// {"A": [re, im], "Bp": [re, im], "Bm": [re, im]}
OneModeForm one_mode_from_json(const json& j);
json one_mode_to_json(const OneModeForm& f);

/// Complex matrix as nested [re, im] rows.
Eigen::MatrixXcd matrix_from_json(const json& j);
json matrix_to_json(const Eigen::MatrixXcd& m);

/// {"A": [[ [re,im], ... ]], "Bp": ..., "Bm": ...} (row-major matrices)
MultiModeForm multimode_from_json(const json& j);
json multimode_to_json(const MultiModeForm& f);

} // namespace bosonspec
