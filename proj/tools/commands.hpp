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
 * Subcommands of the imsteer tool. Each writes its report to the given
 * stream and returns the process exit code; input errors surface as
 * imsteer::Error and are mapped to kExitInput by the caller.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "imsteer/states.hpp"

namespace imsteer::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInvariant = 3;

enum class Format { Csv, Json };

Format parse_format(const std::string &name);

struct RunConfig {
    /// Family name or JSON path.
    std::string state = "werner";
    double v = 1.0;
    double c = 1.0;
    /// Sharpness of Alice's measurements.
    double lambda = 1.0;
    int resolution = 201;
    std::uint64_t samples = 1000000;
    std::uint64_t n = 10000;
    std::uint64_t seed = 42;
    std::string suite = "all";
    std::string criterion = "all";
    double tolerance = 1e-6;
    bool include_maximizer = false;
    bool optimize = false;
    /// Unset: CSV for region and thresholds, JSON otherwise.
    std::optional<Format> format;
};

/// Range checks shared by all subcommands; throws Error.
void validate_config(const RunConfig &config);

int cmd_eval(const RunConfig &config, std::ostream &out);
int cmd_region(const RunConfig &config, std::ostream &out);
int cmd_thresholds(const RunConfig &config, std::ostream &out);
int cmd_monogamy(const RunConfig &config, std::ostream &out);
int cmd_witness(const RunConfig &config, std::ostream &out);
int cmd_audit(const RunConfig &config, std::ostream &out);

struct RegionPoint {
    XStateParams params;
    bool valid = false;
};

/**
 * X-state completing (beta_xx, beta_yy) with beta_z0 = beta_0z = beta_xy =
 * beta_yx = 0. beta_zz is 0 when that is a state, otherwise the midpoint of
 * the feasible interval [|xx - yy| - 1, 1 - |xx + yy|].
 */
RegionPoint region_point(double beta_xx, double beta_yy);

} // namespace imsteer::cli
