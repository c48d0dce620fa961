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
 * Reproducible random numbers.
 *
 * The engine is std::mt19937_64 seeded with a single 64-bit value; its output
 * sequence is fixed by the C++ standard. The distributions below are spelled
 * out instead of using <random>'s, whose algorithms are implementation
 * defined:
 *
 *  - uniform():  (x >> 11) * 2^-53, one engine draw, in [0, 1).
 *  - normal():   Box-Muller, two uniforms u1, u2 per call (u1 is mapped to
 *                1 - u1 so the log argument is in (0, 1]); returns
 *                sqrt(-2 ln(1 - u1)) * cos(2 pi u2). No value is cached.
 *  - complex_normal(): normal() for the real part, then normal() for the
 *                imaginary part.
 *  - uniform_int(lo, hi): lo + floor(uniform() * (hi - lo + 1)).
 *
 * derive_seed() mixes a base seed and a stream index with the SplitMix64
 * finaliser, so parallel blocks get independent, order-free streams.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace imsteer {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform();
    double normal();
    std::complex<double> complex_normal();
    /// Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi);

  private:
    std::mt19937_64 engine_;
};

} // namespace imsteer
