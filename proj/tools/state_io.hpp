// Copyright 2026 The imsteer Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Two-qubit state input for the command-line tool.
 *
 * A state is either a named family or a JSON file. Families: "werner"
 * (visibility v), "mems" (concurrence c), "singlet", "maximally_mixed".
 * Files hold one object with a "kind" key:
 *
 *   {"kind": "werner", "v": 0.8}
 *   {"kind": "mems", "c": 0.9}
 *   {"kind": "xstate", "beta": {"z0": 0, "0z": 0, "xx": 0.9, "xy": 0,
 *                               "yx": 0, "yy": -0.9, "zz": 0.8}}
 *   {"kind": "bloch", "m": [..3], "n": [..3], "T": [[..3] x 3]}
 *   {"kind": "matrix", "re": [[..4] x 4], "im": [[..4] x 4]}
 *
 * Missing beta entries default to zero; "im" may be omitted.
 */

#pragma once

#include <string>

#include <json.hpp>

#include "imsteer/states.hpp"

namespace imsteer::cli {

struct FamilyParams {
    double v = 1.0;
    double c = 1.0;
};

/// Throws Error on unknown kinds, malformed fields or invalid states.
DensityMatrix state_from_json(const nlohmann::json &doc);

/// Family name or path to a JSON file.
DensityMatrix resolve_state(const std::string &source,
                            const FamilyParams &params);

} // namespace imsteer::cli
