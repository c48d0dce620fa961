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
 * Randomised invariant suites. Each suite draws n samples in fixed blocks
 * seeded by derive_seed, reduces the worst residual in block order, and
 * passes when that residual is at most the suite tolerance.
 *
 *  - separable:       max I2 over separable states minus sqrt2.
 *  - convexity:       max I2(a r1 + (1-a) r2) - a I2(r1) - (1-a) I2(r2).
 *  - duality:         max |min_w Tr[w rho] - (sqrt2 - I2(rho))|.
 *  - complementarity: max I_R^x + I_R^y - sqrt2 over qubits.
 *  - closed_form:     max deviation of the closed-form I2 (two-qubit Fano
 *                     form and tripartite reductions) from the operational one.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace imsteer {

struct AuditResult {
    std::string suite;
    std::uint64_t samples = 0;
    double worst = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

const std::vector<std::string> &audit_suites();

/// Throws Error("unknown audit suite '...'") for an unlisted name.
AuditResult run_audit(const std::string &suite, std::uint64_t n,
                      std::uint64_t seed, unsigned threads = 0);

} // namespace imsteer
