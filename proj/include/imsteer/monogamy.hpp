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

#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "imsteer/states.hpp"

namespace imsteer {

class Rng;

inline constexpr double kMonogamyBound = 2.8284271247461903;

/// (rho_AB, rho_AC) of the five-parameter three-qubit state, built entrywise.
std::pair<DensityMatrix, DensityMatrix> reduced_pair(const TripartiteParams &p);

enum class Pair { AB, AC };
enum class AliceAxis { X, Y };

/**
 * Imaginarity of the second party's normalised conditional state after
 * Alice's outcome. Setting x is scored in the y basis, setting y in the x
 * basis. Empty when the outcome probability vanishes (1 +- 2 eta0 eta1 cos or
 * sin theta <= 1e-12).
 */
std::optional<double> tripartite_conditional_imaginarity(
    const TripartiteParams &p, Pair pair, AliceAxis axis, bool plus);

struct MonogamySum {
    double i2ab = 0.0;
    double i2ac = 0.0;
    double sum = 0.0;
};

MonogamySum monogamy_sum(const TripartiteParams &p);

/// eta0 = 1/sqrt2, eta2 = eta3 = 1/2, others zero.
TripartiteParams monogamy_maximizer();

struct MonogamyScan {
    double max_sum = 0.0;
    TripartiteParams argmax{};
    std::uint64_t samples = 0;
};

/// eta = |g| / ||g|| for a standard Gaussian 5-vector g, theta = pi u.
TripartiteParams sample_tripartite(Rng &rng);

/**
 * Maximum of I2(AB) + I2(AC) over n samples. Samples are drawn in fixed-size
 * blocks, block b from derive_seed(seed, b), so the result is independent of
 * the worker count. The maximizer, when included, is scored before every
 * sample and wins ties.
 */
MonogamyScan monogamy_scan(std::uint64_t n, std::uint64_t seed,
                           bool include_maximizer = false,
                           unsigned threads = 0);

} // namespace imsteer
